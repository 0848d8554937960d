"""Brute-force reference implementations, used only by tests and to mint
golden values for the main paths.

These deliberately share nothing with the Groebner or Frobenius-root
machinery beyond the polynomial arithmetic itself.  Splitting existence is
decided by exact F_p linear algebra on a truncated monomial basis; root
minimality and monomial thresholds are decided by exponent-vector
combinatorics.  Every oracle refuses instances beyond its configured size
instead of degrading.

Truncation soundness for the splitting search (see also the README): a
found splitting is always genuine, because the ideal-membership side
conditions are witnessed inside a finite span of actual ideal elements.  A
"no" is exact whenever bounded-degree span membership coincides with ideal
membership at the working degree, which holds for the corpus classes this
oracle accepts: zero, monomial (membership is termwise divisibility) and
principal (membership in degree <= D is division by the single generator,
whose cofactor also has degree <= D) defining ideals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct

from .errors import ContractError, ResourceLimitError
from .groebner import Ideal, RingPresentation
from .ringcore import Polynomial, ceil_threshold_exponent, mono_divides, prime_power


# ---------------------------------------------------------------------------
# dense F_p linear algebra, just enough for solvability checks


def _row_reduce(rows, p):
    """In-place row echelon form; returns list of (pivot_column, row)."""
    pivots = []
    for row in rows:
        row = list(row)
        for col, pivot_row in pivots:
            if row[col]:
                factor = row[col]
                row = [(a - factor * b) % p for a, b in zip(row, pivot_row)]
        lead = next((i for i, a in enumerate(row) if a), None)
        if lead is None:
            continue
        inv = pow(row[lead], p - 2, p)
        row = [a * inv % p for a in row]
        pivots.append((lead, row))
    pivots.sort(key=lambda item: item[0])
    return pivots


def _reduce_vector(vec, pivots, p):
    vec = list(vec)
    for col, row in pivots:
        if vec[col]:
            factor = vec[col]
            vec = [(a - factor * b) % p for a, b in zip(vec, row)]
    return vec


def _solvable(matrix_rows, rhs, p) -> bool:
    """Is A x = b solvable over F_p?  Rows are given column-major free."""
    augmented = [list(row) + [b] for row, b in zip(matrix_rows, rhs)]
    pivots = _row_reduce(augmented, p)
    width = len(augmented[0]) if augmented else 0
    for col, _ in pivots:
        if col == width - 1:
            return False
    return True


# ---------------------------------------------------------------------------
# splitting existence at level one


def _monomials_leq(nvars, degree):
    return sorted(
        (m for m in iproduct(range(degree + 1), repeat=nvars) if sum(m) <= degree),
    )


def _root_coefficients(f: Polynomial, p: int):
    """For each mu in [0,p)^n, the coefficient polynomial of x^(mu/p) in the
    p-th root decomposition of f (own copy: divmod on exponent vectors)."""
    buckets: dict = {}
    for m, c in f.terms.items():
        mu = tuple(v % p for v in m)
        inner = tuple(v // p for v in m)
        buckets.setdefault(mu, {})[inner] = c
    return {mu: Polynomial(f.ring, terms) for mu, terms in buckets.items()}


def brute_splitting_search(
    presentation: RingPresentation,
    a: Ideal,
    t,
    e: int = 1,
    h_degree: int | None = None,
    size_bound: int = 400_000,
) -> bool:
    """Ground truth for level-one splitting existence on tiny instances.

    Enumerates the R-linear maps R^(1/p) -> R through their values on the
    root-monomial basis (degree-truncated) and decides, by exact linear
    algebra over F_p, whether some combination twisted by the threshold
    power of a evaluates to 1.  Refuses anything but e = 1, at most two
    variables, and zero / monomial / principal defining ideals.
    """
    if e != 1:
        raise ContractError("oracle supports e = 1 only")
    ring = presentation.ring
    p = ring.p
    n = ring.nvars
    if n > 2:
        raise ContractError("oracle supports at most 2 variables")
    I = presentation.defining_ideal
    i_gens = [g for g in I.generators if not g.is_zero()]
    if len(i_gens) > 1 and not all(g.is_monomial() for g in i_gens):
        raise ContractError("oracle needs a zero, monomial, or principal defining ideal")

    N = ceil_threshold_exponent(t, p, 1, "pe_minus_1")
    if a.contains_one():
        multipliers = [ring.one()]
    else:
        multipliers = [ring.one()]
        for _ in range(N):
            multipliers = [w * g for w in multipliers for g in a.generators]
        multipliers = sorted(set(multipliers), key=str)
    if any(w.is_zero() for w in multipliers):
        raise ContractError("a-power degenerates to zero")

    if h_degree is None:
        base = max((g.degree() for g in i_gens), default=1)
        h_degree = 2 * base + max(w.degree() for w in multipliers) + 2
    h_monos = _monomials_leq(n, h_degree)
    mus = list(iproduct(range(p), repeat=n))
    unknowns = [(k, mu, beta) for k in range(len(multipliers)) for mu in mus for beta in h_monos]
    if len(unknowns) > size_bound:
        raise ResourceLimitError(f"oracle instance too large: {len(unknowns)} unknowns")

    max_c_degree = 0
    decomposed_constraints = []
    for f in i_gens:
        for gamma in iproduct(range(p), repeat=n):
            shifted = f * ring.monomial(gamma)
            coeffs = _root_coefficients(shifted, p)
            decomposed_constraints.append(coeffs)
            max_c_degree = max(max_c_degree, *(c.degree() for c in coeffs.values()))
    target_coeffs = [ _root_coefficients(w, p) for w in multipliers ]
    for coeffs in target_coeffs:
        max_c_degree = max(max_c_degree, *(c.degree() for c in coeffs.values()))

    work_degree = h_degree + max_c_degree
    space = _monomials_leq(n, work_degree)
    index = {m: i for i, m in enumerate(space)}
    dim = len(space)

    span_rows = []
    for f in i_gens:
        for delta in space:
            shifted = f * ring.monomial(delta)
            if shifted.degree() > work_degree:
                continue
            vec = [0] * dim
            for m, c in shifted.terms.items():
                vec[index[m]] = c
            span_rows.append(vec)
    pivots = _row_reduce(span_rows, p)

    def reduced_product(coeff_poly: Polynomial, beta) -> list[int]:
        prod = coeff_poly * ring.monomial(beta)
        vec = [0] * dim
        for m, c in prod.terms.items():
            vec[index[m]] = c
        return _reduce_vector(vec, pivots, p)

    columns = []
    for k, mu, beta in unknowns:
        descent_parts = []
        for coeffs in decomposed_constraints:
            c_mu = coeffs.get(mu)
            descent_parts.append(
                reduced_product(c_mu, beta) if c_mu is not None else [0] * dim
            )
        t_mu = target_coeffs[k].get(mu)
        target_part = reduced_product(t_mu, beta) if t_mu is not None else [0] * dim
        column = []
        for part in descent_parts:
            column.extend(part)
        column.extend(target_part)
        columns.append(column)

    one_vec = [0] * dim
    one_vec[index[(0,) * n]] = 1
    rhs_tail = _reduce_vector(one_vec, pivots, p)
    nrows = len(columns[0]) if columns else 0
    rhs = [0] * (nrows - dim) + rhs_tail
    matrix_rows = [[col[r] for col in columns] for r in range(nrows)]
    return _solvable(matrix_rows, rhs, p)


# ---------------------------------------------------------------------------
# minimal Frobenius roots of monomial ideals


def brute_frobenius_root(J: Ideal, e: int) -> Ideal:
    """Smallest monomial K with J inside K^[p^e], for monomial J.

    The floor-divided exponent vectors generate it: any monomial x^kappa
    whose bracket power divides a generator satisfies q*kappa <= alpha, so
    kappa <= floor(alpha/q) componentwise and x^(floor(alpha/q)) already
    lies in (x^kappa).  Both validity and that divisor property are checked
    exhaustively over the relevant exponent grid before returning.
    """
    if not J.is_monomial():
        raise ContractError("oracle accepts monomial ideals only")
    if J.is_zero():
        return Ideal(J.ring, (J.ring.zero(),))
    q = prime_power(J.ring.p, e)
    from .ringcore import degrevlex_key

    alphas = [g.leading_monomial(degrevlex_key) for g in J.generators if not g.is_zero()]
    kappas = sorted({tuple(v // q for v in alpha) for alpha in alphas})
    minimal = [k for k in kappas if not any(mono_divides(o, k) for o in kappas if o != k)]

    for alpha in alphas:
        scaled = [tuple(v * q for v in k) for k in minimal]
        if not any(mono_divides(s, alpha) for s in scaled):
            raise ContractError("internal: candidate root fails validity")
        best = tuple(v // q for v in alpha)
        for kappa in iproduct(*(range(v + 1) for v in best)):
            if mono_divides(tuple(v * q for v in kappa), alpha) and not mono_divides(
                kappa, best
            ):
                raise ContractError("internal: exhaustive divisor scan found a smaller root")
    return Ideal(J.ring, tuple(J.ring.monomial(k) for k in minimal))


# ---------------------------------------------------------------------------
# monomial thresholds by lattice optimization


@dataclass(frozen=True)
class MonomialFptResult:
    entries: tuple  # of (e, q, nu)
    lower: Fraction
    upper: Fraction


def monomial_fpt_oracle(a: Ideal, e_max: int) -> MonomialFptResult:
    """Exact nu(p^e) for monomial a with zero defining ideal, by walking the
    exponent lattice below (q-1, ..., q-1); brackets the threshold from the
    deepest level."""
    if not a.is_monomial() or a.is_zero():
        raise ContractError("oracle accepts nonzero monomial ideals only")
    from .ringcore import degrevlex_key

    vectors = [g.leading_monomial(degrevlex_key) for g in a.generators if not g.is_zero()]
    if any(max(v) == 0 for v in vectors):
        raise ContractError("a must be a proper ideal (no unit generator)")
    n = a.ring.nvars
    entries = []
    for e in range(1, e_max + 1):
        q = prime_power(a.ring.p, e)
        bound = q - 1
        best = {(0,) * n: 0}
        frontier = [(0,) * n]
        nu = 0
        while frontier:
            state = frontier.pop()
            depth = best[state]
            for vec in vectors:
                nxt = tuple(s + v for s, v in zip(state, vec))
                if max(nxt) > bound:
                    continue
                if best.get(nxt, -1) < depth + 1:
                    best[nxt] = depth + 1
                    nu = max(nu, depth + 1)
                    frontier.append(nxt)
        entries.append((e, q, nu))
    _, q_star, nu_star = entries[-1]
    return MonomialFptResult(tuple(entries), Fraction(nu_star, q_star), Fraction(nu_star + 1, q_star))
