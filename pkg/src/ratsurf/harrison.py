"""Brute-force Harrison and Hochschild cohomology of finite commutative algebras.

The algebra is A = Q*1 (+) V with V spanned by e_1..e_n and the products
e_i e_j given by structure constants (a scalar part along 1 plus a linear
part in V). Reduced cochains in degree k are multilinear maps on A that
vanish whenever an argument is 1, so they are determined by their values on
basis words (i_1..i_k) from V; coefficients are either the residue field
(V acts as zero) or A itself with its multiplication.

Differential, written on a k-cochain f evaluated at k+1 arguments:

    (d f)(a_0,..,a_k) = a_0 f(a_1,..,a_k)
                        + sum_{j=1..k} (-1)^j f(a_0,..,a_{j-1} a_j,..,a_k)
                        + (-1)^(k+1) a_k f(a_0,..,a_{k-1})

Shuffle convention: a permutation s of {1..p+q} is a (p,q)-shuffle when
s(1) < ... < s(p) and s(p+1) < ... < s(p+q); it moves the tensor slot t to
slot s(t), so on tensors s.(a_1 x..x a_k) puts a_{s^-1(j)} in slot j, and
sh_{p,q} is the signed sum of all (p,q)-shuffles. A cochain f is shuffle
invariant when it kills the image of every sh_{p,k-p}, 0 < p < k; written
out, sum_s sgn(s) f(a_{s^-1(1)},..,a_{s^-1(k)}) = 0, which is exactly
"f vanishes on shuffle products". In degree 2 this says f is symmetric. The
differential preserves shuffle invariance; the coordinate extraction below
verifies that on every computed image and raises if it ever failed.

The shuffle constraints permute only the positions of a word, so they
preserve its multiset of letters. The invariant-cochain computation therefore
splits into blocks indexed by letter content, and blocks whose letter
multiplicities agree as partitions share one kernel computation up to
relabeling. This is what keeps the search spaces small enough for exact
arithmetic; a direct stacked-matrix computation over the full word space
gives the same dimensions and is pinned by tests on small cases.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .qlinalg import QMatrix, as_fraction, in_column_span

DEFAULT_BUDGET = 1500


class BudgetError(RuntimeError):
    """A requested word space n^k exceeds the configured budget."""


class FiniteLocalAlgebra:
    """Commutative associative algebra Q*1 (+) span(e_1..e_n).

    products[i][j] = (scalar, linear) encodes e_i e_j = scalar * 1 +
    sum_v linear[v] e_v, indices 0-based. Commutativity and associativity
    are checked on basis elements at construction time.
    """

    __slots__ = ("n", "products", "_expansions")

    def __init__(self, products) -> None:
        n = len(products)
        table = []
        for i in range(n):
            if len(products[i]) != n:
                raise ValueError("structure constant table must be square")
            row = []
            for j in range(n):
                scalar, linear = products[i][j]
                linear = tuple(as_fraction(x) for x in linear)
                if len(linear) != n:
                    raise ValueError("linear part of e_%d e_%d has wrong length" % (i, j))
                row.append((as_fraction(scalar), linear))
            table.append(tuple(row))
        self.n = n
        self.products = tuple(table)
        for i in range(n):
            for j in range(i):
                if table[i][j] != table[j][i]:
                    raise ValueError("structure constants are not commutative at (%d, %d)" % (i, j))
        self._check_associativity()
        # reverse index: which ordered products e_i e_j hit e_v, and with what weight
        expansions = [[] for _ in range(n)]
        for i in range(n):
            for j in range(n):
                for v, ccoef in enumerate(table[i][j][1]):
                    if ccoef:
                        expansions[v].append((i, j, ccoef))
        self._expansions = tuple(tuple(e) for e in expansions)

    def product(self, i: int, j: int):
        return self.products[i][j]

    def expansions(self, v: int):
        """All (i, j, c) with e_i e_j containing c * e_v, c != 0."""
        return self._expansions[v]

    def _mul_elem_basis(self, elem, k: int):
        # elem = (scalar, vector); returns elem * e_k in the same form
        scalar, vec = elem
        out_s = Fraction(0)
        out_v = [Fraction(0)] * self.n
        out_v[k] += scalar
        for u, x in enumerate(vec):
            if x:
                s2, lin2 = self.products[u][k]
                out_s += x * s2
                for v, y in enumerate(lin2):
                    if y:
                        out_v[v] += x * y
        return out_s, tuple(out_v)

    def _check_associativity(self) -> None:
        for i in range(self.n):
            for j in range(self.n):
                eij = self.products[i][j]
                for k in range(self.n):
                    left = self._mul_elem_basis(eij, k)
                    # e_i (e_j e_k) = (e_j e_k) e_i by commutativity
                    right = self._mul_elem_basis(self.products[j][k], i)
                    if left != right:
                        raise ValueError(
                            "structure constants are not associative at (%d, %d, %d)" % (i, j, k)
                        )


def make_fat_point(m: int) -> FiniteLocalAlgebra:
    """The m-dimensional fat point: e_i e_j = 0 for all i, j."""
    if m < 1:
        raise ValueError("need m >= 1")
    zero = (Fraction(0), tuple(Fraction(0) for _ in range(m)))
    return FiniteLocalAlgebra([[zero] * m for _ in range(m)])


class CoefficientModule:
    """Coefficients for the complexes: the residue field or the algebra itself.

    kind "trivial": values in Q, every e_i acts as zero.
    kind "regular": values in A, basis 1, e_1, .., e_n, honest multiplication.
    """

    __slots__ = ("kind",)

    def __init__(self, kind: str) -> None:
        if kind not in ("trivial", "regular"):
            raise ValueError("kind must be 'trivial' or 'regular'")
        self.kind = kind

    def dim(self, algebra: FiniteLocalAlgebra) -> int:
        return 1 if self.kind == "trivial" else algebra.n + 1

    def act(self, algebra: FiniteLocalAlgebra, i: int, alpha: int):
        """e_i . (value basis vector alpha) as [(beta, coefficient)].

        Regular value basis: index 0 is the unit, index v+1 is e_v.
        """
        if self.kind == "trivial":
            return []
        if alpha == 0:
            return [(i + 1, Fraction(1))]
        scalar, linear = algebra.product(i, alpha - 1)
        out = []
        if scalar:
            out.append((0, scalar))
        for v, c in enumerate(linear):
            if c:
                out.append((v + 1, c))
        return out

    def __repr__(self) -> str:
        return "CoefficientModule(%r)" % self.kind


TRIVIAL = CoefficientModule("trivial")
REGULAR = CoefficientModule("regular")


def _perm_sign(perm) -> int:
    inv = 0
    for a in range(len(perm)):
        for b in range(a + 1, len(perm)):
            if perm[a] > perm[b]:
                inv += 1
    return -1 if inv % 2 else 1


def signed_shuffles(p: int, q: int) -> list:
    """All (p,q)-shuffles of {1..p+q} as (permutation tuple, sign).

    The tuple s satisfies s[t-1] = s(t); there are C(p+q, p) of them.
    """
    if p < 1 or q < 1:
        raise ValueError("need p, q >= 1")
    total = p + q
    out = []
    for first in itertools.combinations(range(1, total + 1), p):
        chosen = set(first)
        rest = tuple(x for x in range(1, total + 1) if x not in chosen)
        perm = first + rest
        out.append((perm, _perm_sign(perm)))
    return out


@lru_cache(maxsize=None)
def _shape_kernel(k: int, shape: tuple):
    """Shuffle-constraint kernel on the words with letter multiplicities `shape`.

    shape is a descending multiplicity pattern for canonical letters 0,1,2,...
    Returns (words, basis, free_positions): words is the sorted tuple of
    block words; basis vectors are tuples of Fractions indexed like words and
    free-position normalized; free_positions[t] is the word index at which
    basis vector t reads 1 and the others read 0.
    """
    letters = []
    for c, mult in enumerate(shape):
        letters.extend([c] * mult)
    words = sorted(set(itertools.permutations(letters)))
    index = {w: t for t, w in enumerate(words)}
    nwords = len(words)
    rows = []
    scratch = [0] * k
    for p in range(1, k):
        shuffles = signed_shuffles(p, k - p)
        for w in words:
            # constraint: the functional kills sh(w) = sum_s sgn(s) (w shuffled by s),
            # where s puts letter w[t] into slot s(t+1)
            row = [0] * nwords
            for perm, sign in shuffles:
                for t in range(k):
                    scratch[perm[t] - 1] = w[t]
                row[index[tuple(scratch)]] += sign
            rows.append(row)
    if rows:
        mat = QMatrix.from_rows(rows)
    else:
        mat = QMatrix.zero(0, nwords)
    basis = [tuple(v) for v in mat.kernel_basis()]
    free = mat.kernel_free_columns()
    return tuple(words), tuple(basis), tuple(free)


@lru_cache(maxsize=None)
def _blocks(n: int, k: int):
    """Content blocks of the degree-k word space on letters 0..n-1.

    Each block is (words, basis, free_words): words are the actual words of
    that content, basis vectors are dicts word -> Fraction, and free_words
    lists the words whose values coordinatize the block's kernel.
    """
    out = []
    for content in itertools.combinations_with_replacement(range(n), k):
        counts = {}
        for letter in content:
            counts[letter] = counts.get(letter, 0) + 1
        # canonical letter c gets the c-th largest multiplicity; ties by letter
        ordered = sorted(counts, key=lambda a: (-counts[a], a))
        shape = tuple(counts[a] for a in ordered)
        relabel = {c: a for c, a in enumerate(ordered)}
        cwords, cbasis, cfree = _shape_kernel(k, shape)
        translate = {cw: tuple(relabel[c] for c in cw) for cw in cwords}
        words = tuple(translate[cw] for cw in cwords)
        basis = []
        for vec in cbasis:
            basis.append({words[t]: x for t, x in enumerate(vec) if x})
        free_words = tuple(words[t] for t in cfree)
        out.append((words, tuple(basis), free_words))
    return tuple(out)


class CochainSpace:
    """Shuffle-invariant reduced cochains of one degree, with explicit basis.

    Basis functionals are indexed value-coordinate-major: functional
    alpha * scalar_dim + t is the t-th scalar kernel vector placed in value
    coordinate alpha. Functionals are sparse dicts (alpha, word) -> Fraction.
    """

    def __init__(self, algebra: FiniteLocalAlgebra, module: CoefficientModule, k: int,
                 budget: int | None = None) -> None:
        if k < 1:
            raise ValueError("need degree k >= 1")
        cap = DEFAULT_BUDGET if budget is None else budget
        if cap < 1:
            raise ValueError("budget must be positive")
        if algebra.n ** k > cap:
            raise BudgetError(
                "word space %d^%d = %d exceeds budget %d" % (algebra.n, k, algebra.n ** k, cap)
            )
        self.algebra = algebra
        self.module = module
        self.k = k
        self.value_dim = module.dim(algebra)
        self.blocks = _blocks(algebra.n, k)
        self.scalar_dim = sum(len(basis) for _, basis, _ in self.blocks)
        self.dim = self.value_dim * self.scalar_dim
        self.full_dim = self.value_dim * algebra.n ** k

    def functional(self, idx: int) -> dict:
        if not (0 <= idx < self.dim):
            raise IndexError("functional index out of range")
        alpha, t = divmod(idx, self.scalar_dim)
        for _, basis, _ in self.blocks:
            if t < len(basis):
                return {(alpha, w): c for w, c in basis[t].items()}
            t -= len(basis)
        raise AssertionError("unreachable")

    def coords_of(self, func: dict) -> list:
        """Coordinates of a functional that lies in this space.

        Reads the free-word entries, then verifies the reconstruction matches
        exactly; a mismatch means the input was outside the invariant
        subspace, which no supported computation should produce.
        """
        coords = [Fraction(0)] * self.dim
        recon = {}
        for alpha in range(self.value_dim):
            base = alpha * self.scalar_dim
            t = 0
            for _, basis, free_words in self.blocks:
                for vec, fw in zip(basis, free_words):
                    c = func.get((alpha, fw), Fraction(0))
                    if c:
                        coords[base + t] = c
                        for w, x in vec.items():
                            key = (alpha, w)
                            val = recon.get(key, Fraction(0)) + c * x
                            if val:
                                recon[key] = val
                            elif key in recon:
                                del recon[key]
                    t += 1
        cleaned = {key: val for key, val in func.items() if val}
        if recon != cleaned:
            raise RuntimeError("functional does not lie in the shuffle-invariant subspace")
        return coords


def apply_differential(algebra: FiniteLocalAlgebra, module: CoefficientModule,
                       k: int, func: dict) -> dict:
    """Apply the degree-k differential to a sparse reduced cochain.

    func maps (alpha, word) -> Fraction with words of length k; the result
    uses words of length k+1. Scalar parts of interior products vanish in the
    reduced complex, so only the linear parts of e_i e_j contribute there.
    """
    out = {}

    def add(key, val):
        cur = out.get(key, Fraction(0)) + val
        if cur:
            out[key] = cur
        elif key in out:
            del out[key]

    last_sign = (-1) ** (k + 1)
    for (alpha, w), c in func.items():
        for i in range(algebra.n):
            for beta, a in module.act(algebra, i, alpha):
                add((beta, (i,) + w), c * a)
                add((beta, w + (i,)), last_sign * c * a)
        for t, letter in enumerate(w):
            sign = (-1) ** (t + 1)
            for i, j, coef in algebra.expansions(letter):
                add((alpha, w[:t] + (i, j) + w[t + 1:]), sign * c * coef)
    return out


def shuffle_invariant_dim(algebra: FiniteLocalAlgebra, module: CoefficientModule,
                          k: int, budget: int | None = None) -> int:
    """Dimension of the shuffle-invariant reduced k-cochains."""
    return CochainSpace(algebra, module, k, budget).dim


def coboundary_matrix(algebra: FiniteLocalAlgebra, module: CoefficientModule,
                      k: int, budget: int | None = None) -> QMatrix:
    """Matrix of the differential between shuffle-invariant spaces k -> k+1,
    in the CochainSpace bases."""
    dom = CochainSpace(algebra, module, k, budget)
    cod = CochainSpace(algebra, module, k + 1, budget)
    cols = []
    for idx in range(dom.dim):
        image = apply_differential(algebra, module, k, dom.functional(idx))
        cols.append(cod.coords_of(image))
    flat = []
    for r in range(cod.dim):
        for col in cols:
            flat.append(col[r])
    return QMatrix(cod.dim, dom.dim, flat)


def harrison_dim(algebra: FiniteLocalAlgebra, module: CoefficientModule,
                 k: int, budget: int | None = None) -> int:
    """dim of degree-k Harrison cohomology (shuffle-invariant complex)."""
    if k < 1:
        raise ValueError("need k >= 1")
    outgoing = coboundary_matrix(algebra, module, k, budget)
    incoming_rank = 0 if k == 1 else coboundary_matrix(algebra, module, k - 1, budget).rank()
    return outgoing.kernel_dim() - incoming_rank


def _full_coboundary(algebra: FiniteLocalAlgebra, module: CoefficientModule,
                     k: int, budget: int | None = None) -> QMatrix:
    """Differential on the full reduced complex (no shuffle restriction)."""
    cap = DEFAULT_BUDGET if budget is None else budget
    n = algebra.n
    if n ** k > cap or n ** (k + 1) > cap:
        raise BudgetError("word space for the full degree-%d differential exceeds budget %d" % (k, cap))
    vdim = module.dim(algebra)
    dom_words = list(itertools.product(range(n), repeat=k))
    cod_words = list(itertools.product(range(n), repeat=k + 1))
    cod_index = {w: t for t, w in enumerate(cod_words)}
    rows = vdim * len(cod_words)
    cols = vdim * len(dom_words)
    flat = [Fraction(0)] * (rows * cols)
    for ci in range(cols):
        alpha, t = divmod(ci, len(dom_words))
        image = apply_differential(algebra, module, k, {(alpha, dom_words[t]): Fraction(1)})
        for (beta, w), val in image.items():
            flat[(beta * len(cod_words) + cod_index[w]) * cols + ci] = val
    return QMatrix(rows, cols, flat)


def hochschild_dim(algebra: FiniteLocalAlgebra, module: CoefficientModule,
                   k: int, budget: int | None = None) -> int:
    """dim of degree-k Hochschild cohomology on the full reduced complex."""
    if k < 1:
        raise ValueError("need k >= 1")
    outgoing = _full_coboundary(algebra, module, k, budget)
    incoming_rank = 0 if k == 1 else _full_coboundary(algebra, module, k - 1, budget).rank()
    return outgoing.kernel_dim() - incoming_rank


def zero_map_check(m: int, k: int, budget: int | None = None) -> bool:
    """Check that restriction to residue-field values kills degree-k classes.

    For the m-dimensional fat point: every cocycle in the shuffle-invariant
    complex with algebra coefficients, after projecting its values to the
    residue field, must land in the image of the degree-(k-1) differential of
    the residue-field complex. Returns the verdict; True means the induced
    map on cohomology is zero in this degree.
    """
    if m < 2:
        raise ValueError("need m >= 2")
    if k < 2:
        raise ValueError("need k >= 2")
    algebra = make_fat_point(m)
    reg = CochainSpace(algebra, REGULAR, k, budget)
    outgoing = coboundary_matrix(algebra, REGULAR, k, budget)
    triv = CochainSpace(algebra, TRIVIAL, k, budget)
    triv_image = coboundary_matrix(algebra, TRIVIAL, k - 1, budget)
    for coords in outgoing.kernel_basis():
        func = {}
        for idx, c in enumerate(coords):
            if c:
                for key, x in reg.functional(idx).items():
                    val = func.get(key, Fraction(0)) + c * x
                    if val:
                        func[key] = val
                    elif key in func:
                        del func[key]
        # residue projection: keep the unit coordinate of each value
        projected = {(0, w): c for (alpha, w), c in func.items() if alpha == 0}
        if not in_column_span(triv_image, triv.coords_of(projected)):
            return False
    return True
