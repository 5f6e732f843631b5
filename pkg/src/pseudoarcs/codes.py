"""Additive codes over the extension field, F_q-linear with q^(hk)
codewords.

Messages are polynomials over F_q of degree below hk.  A coordinate is
one of three kinds: evaluation at a generator of the extension field,
a derivative bundle at a rational parameter t (all h derivative values
folded against the conjugates of a normal element), or the analogous
bundle of leading coefficients for the parameter at infinity.  Folding
generator columns into rank-h subspaces recovers the matching
pseudo-arc, which is how distance facts become geometry and back.
"""

import itertools
from dataclasses import dataclass
from typing import List, Optional, Sequence, Union

from .gf import FieldElement, FieldTower, Poly
from .linalg import SingularMatrixError, rank, solve
from .nrc import is_imaginary, osc_basis
from .projgeo import Spread, Subspace, span
from .pseudoarc import ArcVerdict, contained_in_spread, is_pseudo_arc


class _Erased:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ERASED"


ERASED = _Erased()


class DecodeError(Exception):
    pass


@dataclass(frozen=True)
class CoordSpec:
    """What one code coordinate computes from the message polynomial."""

    kind: str  # "alpha" | "deriv" | "infty" | "external"
    param: Optional[FieldElement] = None

    def __repr__(self):
        if self.param is not None:
            return "CoordSpec(%s, %d)" % (self.kind, self.param.val)
        return "CoordSpec(%s)" % self.kind


class AdditiveCode:
    """F_q-linear code of length n over F_{q^h}, given by an hk x n
    generator matrix whose F_q-row-combinations are the codewords."""

    def __init__(self, tow: FieldTower, k_msg: int,
                 gen: Sequence[Sequence[FieldElement]],
                 eval_spec: Sequence[CoordSpec]):
        gen = [list(row) for row in gen]
        hk = tow.h * k_msg
        if len(gen) != hk:
            raise ValueError("generator must have hk rows")
        n = len(gen[0])
        if any(len(row) != n for row in gen):
            raise ValueError("ragged generator matrix")
        if n <= k_msg:
            raise ValueError("length must exceed the design parameter k")
        if len(eval_spec) != n:
            raise ValueError("one coordinate descriptor per column")
        expanded = []
        for row in gen:
            flat = []
            for x in row:
                flat.extend(tow.normal_coords(x))
            expanded.append(flat)
        if rank(expanded) != hk:
            raise ValueError("generator rows are dependent over the base field")
        self.tow = tow
        self.k_msg = k_msg
        self.n = n
        self.gen = tuple(tuple(row) for row in gen)
        self.eval_spec = tuple(eval_spec)
        self.omega = tow.normal_element()

    @property
    def h(self) -> int:
        return self.tow.h

    @property
    def q(self) -> int:
        return self.tow.q

    @property
    def size(self) -> int:
        return self.q ** (self.h * self.k_msg)

    def __repr__(self):
        return "AdditiveCode(n=%d, size=%d^%d, over GF(%d))" % (
            self.n, self.q, self.h * self.k_msg, self.tow.top.order)

    def combine(self, message: Sequence[FieldElement]) -> List[FieldElement]:
        """Codeword as the F_q-combination of the generator rows."""
        hk = self.h * self.k_msg
        message = list(message)
        if len(message) != hk:
            raise ValueError("message must have hk coefficients")
        out = [self.tow.top.zero] * self.n
        for c, row in zip(message, self.gen):
            if not c:
                continue
            lc = self.tow.lift(c)
            for j in range(self.n):
                out[j] = out[j] + lc * row[j]
        return out


def evaluation_code(tow: FieldTower, alphas: Sequence[FieldElement],
                    k_msg: int) -> AdditiveCode:
    """The code whose columns evaluate messages at the given generators
    of the extension: column j carries the powers of alpha_j."""
    alphas = list(alphas)
    if len(set(a.val for a in alphas)) != len(alphas):
        raise ValueError("repeated evaluation point")
    for a in alphas:
        if not is_imaginary(a, tow):
            raise ValueError("evaluation point %d does not generate the extension" % a.val)
    hk = tow.h * k_msg
    gen = []
    power = [tow.top.one for _ in alphas]
    for _ in range(hk):
        gen.append(list(power))
        power = [p * a for p, a in zip(power, alphas)]
    spec = [CoordSpec("alpha", a) for a in alphas]
    return AdditiveCode(tow, k_msg, gen, spec)


def extend_with_derivatives(code: AdditiveCode, ts: Sequence[FieldElement],
                            include_infty: bool = False) -> AdditiveCode:
    """Append derivative-bundle columns at the given rational
    parameters, and optionally the bundle at infinity.

    The column at t is the transpose of the order-(h-1) derivative rows
    folded against (omega, omega^q, ...): entry r is
    sum_i A_t[i][r] * omega^(q^i).  The infinity column pairs the last
    h coefficient slots with the conjugates in ascending order.
    """
    tow = code.tow
    h, hk = tow.h, tow.h * code.k_msg
    if tow.p < h:
        raise ValueError("characteristic %d below h = %d" % (tow.p, h))
    ts = list(ts)
    if len(set(t.val for t in ts)) != len(ts):
        raise ValueError("repeated derivative parameter")
    omega_pows = [tow.frobenius(code.omega, i) for i in range(h)]
    new_cols = []
    new_spec = []
    for t in ts:
        if t.field is not tow.base:
            raise ValueError("derivative parameters live in the base field")
        rows = osc_basis(t, h - 1, hk)
        col = []
        for r in range(hk):
            acc = tow.top.zero
            for i in range(h):
                if rows[i][r]:
                    acc = acc + tow.lift(rows[i][r]) * omega_pows[i]
            col.append(acc)
        new_cols.append(col)
        new_spec.append(CoordSpec("deriv", t))
    if include_infty:
        col = []
        for r in range(hk):
            if r >= hk - h:
                col.append(omega_pows[r - (hk - h)])
            else:
                col.append(tow.top.zero)
        new_cols.append(col)
        new_spec.append(CoordSpec("infty"))
    gen = [list(row) + [c[r] for c in new_cols]
           for r, row in enumerate(code.gen)]
    return AdditiveCode(tow, code.k_msg, gen, list(code.eval_spec) + new_spec)


def code_from_subspaces(tow: FieldTower, subspaces: Sequence[Subspace],
                        k_msg: int) -> AdditiveCode:
    """One column per rank-h subspace, folding its basis rows against
    the conjugates of the normal element.  Inverse of fold_columns up
    to the choice of basis within each subspace."""
    h = tow.h
    omega_pows = [tow.frobenius(tow.normal_element(), i) for i in range(h)]
    gen_cols = []
    for s in subspaces:
        if s.field is not tow.base or s.rank != h:
            raise ValueError("need base-level subspaces of rank h")
        col = []
        for r in range(s.ambient_dim):
            acc = tow.top.zero
            for i in range(h):
                if s.rows[i][r]:
                    acc = acc + tow.lift(s.rows[i][r]) * omega_pows[i]
            col.append(acc)
        gen_cols.append(col)
    n = len(gen_cols)
    hk = h * k_msg
    gen = [[gen_cols[j][r] for j in range(n)] for r in range(hk)]
    spec = [CoordSpec("external")] * n
    return AdditiveCode(tow, k_msg, gen, spec)


def encode(message: Union[Poly, Sequence[FieldElement]],
           code: AdditiveCode) -> List[FieldElement]:
    """Evaluate a message polynomial coordinate by coordinate.

    Accepts the polynomial or its base-field coefficient vector (low
    degree first, length up to hk).
    """
    tow = code.tow
    hk = tow.h * code.k_msg
    if isinstance(message, Poly):
        f = message
    else:
        f = Poly(tow.base, list(message))
    if f.field is not tow.base:
        raise ValueError("message coefficients must lie in the base field")
    if f.degree >= hk:
        raise ValueError("message degree %d too large" % f.degree)
    coeffs = [f.coefficient(i) for i in range(hk)]
    omega_pows = [tow.frobenius(code.omega, i) for i in range(tow.h)]
    word = []
    for j, spec in enumerate(code.eval_spec):
        if spec.kind == "alpha":
            word.append(f.evaluate(spec.param, tow))
        elif spec.kind == "deriv":
            acc = tow.top.zero
            for i in range(tow.h):
                val = f.derivative(i).evaluate(spec.param)
                if val:
                    acc = acc + tow.lift(val) * omega_pows[i]
            word.append(acc)
        elif spec.kind == "infty":
            acc = tow.top.zero
            for i in range(tow.h):
                c = coeffs[hk - tow.h + i]
                if c:
                    acc = acc + tow.lift(c) * omega_pows[i]
            word.append(acc)
        elif spec.kind == "external":
            acc = tow.top.zero
            for c, row in zip(coeffs, code.gen):
                if c:
                    acc = acc + tow.lift(c) * row[j]
            word.append(acc)
        else:
            raise ValueError("unknown coordinate kind %r" % spec.kind)
    return word


def min_distance(code: AdditiveCode, max_words: int = 2 ** 20) -> int:
    """Minimum nonzero Hamming weight by exhausting the message space
    (additivity makes this the minimum distance)."""
    if code.size > max_words:
        raise ValueError("code has %d words, over the budget %d; "
                         "use the geometric route" % (code.size, max_words))
    tow = code.tow
    hk = tow.h * code.k_msg
    base_elems = list(tow.base.elements())
    best = code.n + 1
    for message in itertools.product(base_elems, repeat=hk):
        if not any(message):
            continue
        word = code.combine(list(message))
        weight = sum(1 for x in word if x)
        if weight < best:
            best = weight
    return best


def fold_columns(code: AdditiveCode) -> List[Subspace]:
    """The rank-h base-level subspace spanned by each column's
    normal-basis coordinate rows, order preserved.

    Column entries x expand as x = sum_i c_i omega^(q^i); the vectors
    of i-th coordinates, one per conjugate, span the subspace.
    """
    tow = code.tow
    h = tow.h
    out = []
    for j in range(code.n):
        rows = [[None] * (h * code.k_msg) for _ in range(h)]
        for r in range(h * code.k_msg):
            coords = tow.normal_coords(code.gen[r][j])
            for i in range(h):
                rows[i][r] = coords[i]
        out.append(span(rows, field=tow.base))
    return out


def is_mds(code: AdditiveCode, max_words: int = 2 ** 20) -> bool:
    """Whether the code attains the Singleton bound, decided through
    the geometry: its folded columns must form a pseudo-arc.  When the
    message space fits the enumeration budget the distance is computed
    too and the two answers are required to agree."""
    folded = fold_columns(code)
    geometric = bool(is_pseudo_arc(folded, code.k_msg))
    if code.size <= max_words:
        d = min_distance(code, max_words)
        assert geometric == (d == code.n - code.k_msg + 1), \
            "geometric and metric verdicts disagree"
    return geometric


def erasure_decode(received: Sequence[object], code: AdditiveCode) -> Poly:
    """Recover the message polynomial from a word with ERASED marks.

    The first k_msg surviving coordinates each contribute h base-field
    equations (one per normal-basis coordinate); the stacked hk x hk
    system is solved and the result re-encoded and checked against
    every surviving coordinate.
    """
    tow = code.tow
    h, hk = tow.h, tow.h * code.k_msg
    received = list(received)
    if len(received) != code.n:
        raise DecodeError("word length %d, expected %d" % (len(received), code.n))
    survivors = [j for j, x in enumerate(received) if x is not ERASED]
    if len(survivors) < code.k_msg:
        raise DecodeError("only %d unerased coordinates, need %d"
                          % (len(survivors), code.k_msg))
    selected = survivors[:code.k_msg]
    matrix = []
    rhs = []
    for j in selected:
        target = tow.normal_coords(received[j])
        col_coords = [tow.normal_coords(code.gen[r][j]) for r in range(hk)]
        for i in range(h):
            matrix.append([col_coords[r][i] for r in range(hk)])
            rhs.append(target[i])
    try:
        coeffs = solve(matrix, rhs)
    except SingularMatrixError:
        raise DecodeError("selected coordinates do not determine the message")
    message = Poly(tow.base, coeffs)
    reencoded = encode(message, code)
    for j in survivors:
        if reencoded[j] != received[j]:
            raise DecodeError("re-encoding mismatch at coordinate %d: "
                              "word has errors, not just erasures" % j)
    return message


def linear_equivalence_test(code: AdditiveCode, spread: Spread) -> ArcVerdict:
    """Whether the folded columns all lie in the given spread: a true
    verdict certifies equivalence to a base-field-linear code realized
    inside that spread, a false one carries the witness column index."""
    return contained_in_spread(fold_columns(code), spread)
