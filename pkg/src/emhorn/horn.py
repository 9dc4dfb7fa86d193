"""Horn filling: validation, solvers, certificates and sweeps.

A horn assignment into a simplicial monoid pins down all faces of a would-be
n-simplex except the k-th.  Whether a filler exists reduces to a system of
subset-sum equations over the coefficient monoid: one equation per given
face index i and per target generator g, saying that the coordinates whose
i-th face lands on g add up to the corresponding coordinate of the given
face.

The solver first propagates: any equation with a single unknown is solved
outright and substituted.  Either this chain ends in an unsolvable
single-unknown equation, which is a human-readable certificate that no
filler exists, or a residual system remains and is finished by search
(finite monoids, and the naturals where subset sums bound every variable
by the smallest right-hand side it appears under) or by exact integer
elimination (the integers).

Group targets additionally get the classical constructive filler, built by
correcting a degenerate start with degeneracies and inverses below the
missing index and then above it.  Every filler returned by any engine is
re-verified against the given faces before being reported.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional, Union

from .em import EMSimplex, EMSpace
from .monoid import (
    CommutativeMonoid,
    Element,
    UndecidableError,
    solve_value,
    solve_value_all,
)
from .sset import TruncatedSimplicialSet, render_id

Target = Union[EMSpace, TruncatedSimplicialSet]


@dataclass
class HornProblem:
    """Faces i -> x_i for every i except k, aimed at an n-simplex."""

    target: Target
    n: int
    k: int
    faces: dict

    def given_indices(self) -> list[int]:
        return sorted(self.faces)

    def describe(self) -> str:
        return f"Lambda^{self.k}[{self.n}] -> {self.target.name}"


def horn_from_simplex(K: EMSpace, n: int, k: int, y: EMSimplex) -> HornProblem:
    """The horn data obtained by forgetting the k-th face of a simplex."""
    faces = {i: K.face(n, i, y) for i in range(n + 1) if i != k}
    return HornProblem(K, n, k, faces)


def validate_horn(problem: HornProblem) -> tuple[bool, Optional[tuple[int, int]]]:
    """Check the data defines a map from the horn.

    Malformed input (wrong face indices, wrong levels) raises ValueError.
    Returns (True, None) when all pairwise face compatibilities hold, else
    (False, (i, j)) with the first violating pair.
    """
    target, n, k = problem.target, problem.n, problem.k
    if n < 1:
        raise ValueError(f"horns exist in dimension >= 1, got n={n}")
    if not 0 <= k <= n:
        raise ValueError(f"horn index {k} out of range for [{n}]")
    expected = {i for i in range(n + 1) if i != k}
    if set(problem.faces) != expected:
        raise ValueError(
            f"horn needs faces {sorted(expected)}, got {sorted(problem.faces)}"
        )
    if isinstance(target, EMSpace):
        if n > target.dim_bound:
            raise ValueError(f"dimension {n} exceeds truncation {target.dim_bound}")
        for i, x in problem.faces.items():
            if not isinstance(x, EMSimplex) or x.level != n - 1:
                raise ValueError(f"face {i} is not a level-{n - 1} simplex")
            if len(x.coords) != target.rank(n - 1):
                raise ValueError(f"face {i} has the wrong number of coordinates")
        if n >= 2:
            given = problem.given_indices()
            for pos, i in enumerate(given):
                for j in given[pos + 1 :]:
                    lhs = target.face(n - 1, i, problem.faces[j])
                    rhs = target.face(n - 1, j - 1, problem.faces[i])
                    if lhs != rhs:
                        return False, (i, j)
    else:
        if n > target.dim_bound:
            raise ValueError(f"dimension {n} exceeds truncation {target.dim_bound}")
        level = set(target.level(n - 1))
        for i, x in problem.faces.items():
            if x not in level:
                raise ValueError(f"face {i} ({render_id(x)}) is not a level-{n - 1} simplex")
        if n >= 2:
            given = problem.given_indices()
            for pos, i in enumerate(given):
                for j in given[pos + 1 :]:
                    if target.face(n - 1, i, problem.faces[j]) != target.face(
                        n - 1, j - 1, problem.faces[i]
                    ):
                        return False, (i, j)
    return True, None


# ---------------------------------------------------------------------------
# Constraint systems over EM spaces


@dataclass(frozen=True)
class Equation:
    """Subset sum over the level-n generators: sum of vars = rhs."""

    face: int
    gen_pos: int
    vars: tuple[int, ...]
    rhs: Element


@dataclass
class ConstraintSystem:
    space: EMSpace
    problem: HornProblem
    variables: list
    equations: list[Equation] = field(repr=False)


def build_constraints(K: EMSpace, problem: HornProblem) -> ConstraintSystem:
    """The filler conditions as a deterministic equation list.

    Equations are ordered by given face index, then by target generator.
    A generator of the missing level that hits the basepoint under some
    face simply does not occur in that face's equations.
    """
    ok, violation = validate_horn(problem)
    if not ok:
        raise ValueError(f"incompatible horn data at face pair {violation}")
    n = problem.n
    equations = []
    for i in problem.given_indices():
        fibers = K.face_fibers(n, i)
        rhs_coords = problem.faces[i].coords
        for gen_pos, var_idxs in enumerate(fibers):
            equations.append(Equation(i, gen_pos, var_idxs, rhs_coords[gen_pos]))
    return ConstraintSystem(K, problem, list(K.gens[n]), equations)


# ---------------------------------------------------------------------------
# Results and certificates


@dataclass(frozen=True)
class CertStep:
    kind: str  # "assign" | "contradiction" | "exhausted"
    variable: Optional[str]
    equation: str
    value: Optional[Element]
    known: Optional[Element] = None
    rhs: Optional[Element] = None
    face: Optional[int] = None


@dataclass
class FillerResult:
    filler: Optional[object]
    steps: tuple[CertStep, ...] = ()
    note: Optional[str] = None

    @property
    def found(self) -> bool:
        return self.filler is not None


def _equation_text(system: ConstraintSystem, eq: Equation, assignment: list) -> str:
    M = system.space.monoid
    unknown = [v for v in eq.vars if assignment[v] is None]
    known = M.sum(assignment[v] for v in eq.vars if assignment[v] is not None)
    terms = [f"x({system.space.gens[system.problem.n][v]})" for v in unknown]
    if known != M.identity or not terms:
        terms.append(M.render(known))
    return " + ".join(terms) + f" = {M.render(eq.rhs)}"


def _verify_em_filler(system: ConstraintSystem, y: EMSimplex) -> bool:
    K, p = system.space, system.problem
    return all(K.face(p.n, i, y) == x for i, x in p.faces.items())


# ---------------------------------------------------------------------------
# Propagation and residual search


def _propagate(system: ConstraintSystem, M: CommutativeMonoid):
    """Substitute forced values from single-unknown equations to a fixpoint.

    Groups and the naturals are cancellative, so a single-unknown equation
    determines its variable outright (or is unsolvable, ending the chain in
    a contradiction certificate).  In a non-cancellative finite monoid such
    an equation may have several solutions; committing to one would lose
    fillers, so those equations are left for the search phase and only the
    forced ones are substituted.

    Returns (assignment, steps, failed_step).  When failed_step is not None
    the chain ended in a contradiction and the assignment is meaningless.
    """
    nvars = len(system.variables)
    cancellative = M.is_group or M.is_free_natural
    assignment: list = [None] * nvars
    steps: list[CertStep] = []
    pending = list(range(len(system.equations)))
    progress = True
    while progress:
        progress = False
        remaining = []
        for eq_idx in pending:
            eq = system.equations[eq_idx]
            unknown = [v for v in eq.vars if assignment[v] is None]
            known = M.sum(assignment[v] for v in eq.vars if assignment[v] is not None)
            if not unknown:
                if known != eq.rhs:
                    step = CertStep(
                        "contradiction",
                        None,
                        f"{M.render(known)} = {M.render(eq.rhs)}",
                        None,
                        known=known,
                        rhs=eq.rhs,
                        face=eq.face,
                    )
                    return assignment, steps, step
                continue
            if len(unknown) == 1:
                text = _equation_text(system, eq, assignment)
                var = unknown[0]
                name = str(system.space.gens[system.problem.n][var])
                if cancellative:
                    solutions = solve_value(M, known, eq.rhs)
                    solutions = [] if solutions is None else [solutions]
                else:
                    solutions = solve_value_all(M, known, eq.rhs)
                if not solutions:
                    step = CertStep(
                        "contradiction", name, text, None,
                        known=known, rhs=eq.rhs, face=eq.face,
                    )
                    return assignment, steps, step
                if len(solutions) > 1:
                    remaining.append(eq_idx)
                    continue
                assignment[var] = solutions[0]
                steps.append(
                    CertStep(
                        "assign", name, text, solutions[0],
                        known=known, rhs=eq.rhs, face=eq.face,
                    )
                )
                progress = True
                continue
            remaining.append(eq_idx)
        pending = remaining
    return assignment, steps, None


def _search_residual(
    system: ConstraintSystem,
    M: CommutativeMonoid,
    assignment: list,
    slack: int = 0,
    limit: int = 1,
):
    """Finish a propagated system by bounded search.

    Yields completed assignments (as lists) in canonical order, at most
    ``limit`` of them.  Returns the per-variable bounds used, for the
    exhaustion note.  Raises UndecidableError when no capability applies.
    """
    nvars = len(system.variables)
    unassigned = [v for v in range(nvars) if assignment[v] is None]
    residual = [
        eq for eq in system.equations if any(assignment[v] is None for v in eq.vars)
    ]
    by_var: dict[int, list[Equation]] = {v: [] for v in unassigned}
    for eq in residual:
        for v in eq.vars:
            if assignment[v] is None:
                by_var[v].append(eq)

    constrained = [v for v in unassigned if by_var[v]]
    free = [v for v in unassigned if not by_var[v]]

    if M.is_free_natural:
        domains = {}
        for v in constrained:
            best = None
            for eq in by_var[v]:
                known = M.sum(assignment[w] for w in eq.vars if assignment[w] is not None)
                residual_rhs = M.try_subtract(eq.rhs, known)
                if residual_rhs is None:
                    return [], {v: [] for v in constrained}
                if best is None or M.leq(residual_rhs, best):
                    best = residual_rhs
            domains[v] = M.bounded_elements(best, extra=slack)
    elif M.is_finite:
        domains = {v: list(M.elements) for v in constrained}
    else:
        raise UndecidableError(
            f"residual system over {M.name} has no search strategy; undecidable here"
        )

    solutions = []

    def extend(pos: int, current: list) -> bool:
        if pos == len(constrained):
            for eq in residual:
                total = M.sum(current[v] for v in eq.vars)
                if total != eq.rhs:
                    return False
            out = list(current)
            for v in free:
                out[v] = M.identity
            solutions.append(out)
            return len(solutions) >= limit
        v = constrained[pos]
        for value in domains[v]:
            current[v] = value
            done = False
            ok = True
            for eq in by_var[v]:
                if all(current[w] is not None for w in eq.vars):
                    if M.sum(current[w] for w in eq.vars) != eq.rhs:
                        ok = False
                        break
            if ok:
                done = extend(pos + 1, current)
            current[v] = None
            if done:
                return True
        return False

    extend(0, list(assignment))
    return solutions, domains


def _solve_integer_linear(rows: list[list[int]], rhs: list[int], ncols: int):
    """One integer solution of a linear system, or None; also the number of
    free columns (zero means the solution is unique when it exists).

    Columns are reduced by unimodular operations while tracking the change
    of basis, after which forward substitution with divisibility checks
    decides solvability exactly.
    """
    m = len(rows)
    n = ncols
    if n == 0:
        return ([] if all(r == 0 for r in rhs) else None), 0
    if m == 0:
        return [0] * n, n
    A = [list(r) for r in rows]
    V = [[int(i == j) for j in range(n)] for i in range(n)]
    pivots = {}
    pc = 0
    for r in range(m):
        if pc >= n:
            break
        while True:
            nz = [c for c in range(pc, n) if A[r][c] != 0]
            if len(nz) <= 1:
                break
            c0 = min(nz, key=lambda c: abs(A[r][c]))
            for c in nz:
                if c == c0:
                    continue
                q = A[r][c] // A[r][c0]
                if q:
                    for rr in range(m):
                        A[rr][c] -= q * A[rr][c0]
                    for rr in range(n):
                        V[rr][c] -= q * V[rr][c0]
        nz = [c for c in range(pc, n) if A[r][c] != 0]
        if nz:
            c = nz[0]
            if c != pc:
                for rr in range(m):
                    A[rr][pc], A[rr][c] = A[rr][c], A[rr][pc]
                for rr in range(n):
                    V[rr][pc], V[rr][c] = V[rr][c], V[rr][pc]
            pivots[r] = pc
            pc += 1
    y = [0] * n
    for r in range(m):
        acc = sum(A[r][c] * y[c] for c in range(n) if A[r][c])
        resid = rhs[r] - acc
        if r in pivots:
            c = pivots[r]
            if resid % A[r][c] != 0:
                return None, n - pc
            y[c] = resid // A[r][c]
        elif resid != 0:
            return None, n - pc
    x = [sum(V[r][c] * y[c] for c in range(n)) for r in range(n)]
    return x, n - pc


def _eliminate_group_residual(system, M, assignment):
    """Exact residual solving over the integers under addition.

    Returns (solution_assignment | None, free_count).  Variables outside
    every residual equation are unconstrained and take the identity; the
    free count covers only matrix columns, the caller accounts for the
    rest.  Only the integers carry this path; other infinite groups have
    no residual strategy.
    """
    if not getattr(M, "integer_addition", False):
        raise UndecidableError(
            f"residual elimination over {M.name} is not supported; undecidable here"
        )
    residual = [
        eq for eq in system.equations if any(assignment[v] is None for v in eq.vars)
    ]
    involved = sorted({v for eq in residual for v in eq.vars if assignment[v] is None})
    col_of = {v: c for c, v in enumerate(involved)}
    rows, rhs = [], []
    for eq in residual:
        known = M.sum(assignment[v] for v in eq.vars if assignment[v] is not None)
        row = [0] * len(involved)
        for v in eq.vars:
            if assignment[v] is None:
                row[col_of[v]] += 1
        rows.append(row)
        rhs.append(M.op(eq.rhs, M.inverse(known)))
    x, free_count = _solve_integer_linear(rows, rhs, len(involved))
    if x is None:
        return None, free_count
    out = list(assignment)
    for v, c in col_of.items():
        out[v] = x[c]
    for v in range(len(out)):
        if out[v] is None:
            out[v] = M.identity
    return out, free_count


def solve_em(
    system: ConstraintSystem,
    monoid: Optional[CommutativeMonoid] = None,
    slack: int = 0,
) -> FillerResult:
    """Decide the constraint system and certify the outcome.

    ``slack`` widens the per-variable search bounds over the naturals; it
    exists so the bound-soundness claim can be exercised (enlarging the
    bounds must never change a verdict).
    """
    M = monoid if monoid is not None else system.space.monoid
    if not (M.is_group or M.is_free_natural or M.is_finite):
        raise UndecidableError(f"no solver capability for {M.name}; undecidable here")
    assignment, steps, failed = _propagate(system, M)
    if failed is not None:
        return FillerResult(None, tuple(steps) + (failed,), None)
    if any(v is None for v in assignment):
        if M.is_free_natural or M.is_finite:
            solutions, domains = _search_residual(system, M, assignment, slack=slack)
            if not solutions:
                sizes = ", ".join(
                    f"x({system.variables[v]}): {len(dom)} candidates"
                    for v, dom in sorted(domains.items())
                )
                note = f"search exhausted; {sizes or 'no residual candidates'}"
                step = CertStep("exhausted", None, note, None)
                return FillerResult(None, tuple(steps) + (step,), note)
            assignment = solutions[0]
        else:
            solved, _ = _eliminate_group_residual(system, M, assignment)
            if solved is None:
                note = "integer elimination: residual system has no solution"
                step = CertStep("exhausted", None, note, None)
                return FillerResult(None, tuple(steps) + (step,), note)
            assignment = solved
    y = EMSimplex(system.problem.n, tuple(assignment))
    assert _verify_em_filler(system, y), "solver produced a non-filler; this is a bug"
    return FillerResult(y, tuple(steps), None)


def count_fillers(
    system: ConstraintSystem,
    monoid: Optional[CommutativeMonoid] = None,
    limit: int = 2,
) -> int:
    """How many fillers exist, counted up to ``limit``."""
    M = monoid if monoid is not None else system.space.monoid
    assignment, _, failed = _propagate(system, M)
    if failed is not None:
        return 0
    unassigned = [v for v in range(len(assignment)) if assignment[v] is None]
    if not unassigned:
        return 1
    in_equation = set()
    for eq in system.equations:
        in_equation.update(eq.vars)
    free = [v for v in unassigned if v not in in_equation]
    if M.is_free_natural or M.is_finite:
        solutions, _ = _search_residual(system, M, assignment, limit=limit)
        count = len(solutions)
    elif M.is_group:
        solved, free_cols = _eliminate_group_residual(system, M, assignment)
        if solved is None:
            return 0
        count = 1 if free_cols == 0 else limit
    else:
        raise UndecidableError(f"cannot count fillers over {M.name}; undecidable here")
    if count and free:
        size = len(M.elements) if M.is_finite else None
        if size is None or size > 1:
            count = limit
    return min(count, limit)


# ---------------------------------------------------------------------------
# Constructive filler for group coefficients


def moore_filler(K: EMSpace, problem: HornProblem) -> FillerResult:
    """The classical horn filler available in any simplicial group.

    Starting from the identity simplex, each given face below k and then
    each above k is corrected in turn by adding a degeneracy of the current
    error; the simplicial identities guarantee corrections never disturb
    faces already fixed.  The result is re-verified before returning.
    """
    M = K.monoid
    if not M.is_group:
        raise ValueError(f"{M.name} is not a group; the constructive filler needs inverses")
    ok, violation = validate_horn(problem)
    if not ok:
        raise ValueError(f"incompatible horn data at face pair {violation}")
    n, k = problem.n, problem.k
    y = K.zero(n)
    for r in range(k):
        error = K.sub(problem.faces[r], K.face(n, r, y))
        y = K.add(y, K.degeneracy(n - 1, r, error))
    for r in range(n, k, -1):
        error = K.sub(problem.faces[r], K.face(n, r, y))
        y = K.add(y, K.degeneracy(n - 1, r - 1, error))
    for i, x in problem.faces.items():
        assert K.face(n, i, y) == x, f"constructive filler missed face {i}; this is a bug"
    return FillerResult(y, (), "constructive group filler")


# ---------------------------------------------------------------------------
# Brute force oracle


def iter_fillers(
    target: Target, problem: HornProblem, value_bound: Optional[int] = None
) -> Iterator[object]:
    """All fillers in canonical candidate order, by exhaustive scan."""
    ok, violation = validate_horn(problem)
    if not ok:
        raise ValueError(f"incompatible horn data at face pair {violation}")
    n = problem.n
    if isinstance(target, EMSpace):
        for y in target.enumerate_level(n, bound=value_bound):
            if all(target.face(n, i, y) == x for i, x in problem.faces.items()):
                yield y
    else:
        for y in target.level(n):
            if all(target.face(n, i, y) == x for i, x in problem.faces.items()):
                yield y


def brute_force_filler(
    target: Target, problem: HornProblem, value_bound: Optional[int] = None
) -> FillerResult:
    """Exhaustive scan oracle: first verified candidate, else the scan size."""
    n = problem.n
    if isinstance(target, EMSpace):
        candidates = target.enumerate_level(n, bound=value_bound)
    else:
        candidates = list(target.level(n))
    ok, violation = validate_horn(problem)
    if not ok:
        raise ValueError(f"incompatible horn data at face pair {violation}")
    for y in candidates:
        matched = all(target.face(n, i, y) == x for i, x in problem.faces.items())
        if matched:
            return FillerResult(y, (), f"scan of {len(candidates)} candidates")
    note = f"exhausted scan of all {len(candidates)} level-{n} candidates"
    if value_bound is not None:
        note += f" (coordinate bound {value_bound})"
    return FillerResult(None, (CertStep("exhausted", None, note, None),), note)


# ---------------------------------------------------------------------------
# The inner-horn counterexample over the naturals


@dataclass
class CounterexampleReport:
    space: EMSpace
    problem: HornProblem
    result: FillerResult

    def lines(self) -> list[str]:
        M = self.space.monoid
        face_desc = ", ".join(
            f"{i} -> ({','.join(M.render(c) for c in x.coords)})"
            for i, x in sorted(self.problem.faces.items())
        )
        out = [
            f"horn {self.problem.describe()} with faces {face_desc}",
        ]
        for step in self.result.steps:
            if step.kind == "assign":
                out.append(f"forced: x({step.variable}) = {M.render(step.value)}   [face {step.face}]")
            elif step.kind == "contradiction":
                out.append(f"required: {step.equation}: no solution in {M.name}   [face {step.face}]")
            else:
                out.append(step.equation)
        out.append("no filler exists")
        return out

    def to_json(self) -> dict:
        return certificate_json(self.problem, self.result)


def quasicategory_counterexample(f0: int = 0) -> CounterexampleReport:
    """The inner 3-horn over the naturals in degree 2 that admits no filler.

    The face over index 0 is a free parameter; faces 2 and 3 carry the
    values 1 and 3.  Propagation pins the last coordinate to 3 and then the
    middle coordinate would have to solve x + 3 = 1 in the naturals, which
    certifies that no filler exists.
    """
    from .monoid import nat

    if f0 < 0:
        raise ValueError("the free face value must be a natural number")
    K = EMSpace(nat(), 2, 3)
    problem = HornProblem(
        K,
        3,
        1,
        {
            0: K.simplex(2, (f0,)),
            2: K.simplex(2, (1,)),
            3: K.simplex(2, (3,)),
        },
    )
    result = solve_em(build_constraints(K, problem))
    if result.found:
        raise RuntimeError("a filler appeared where none can exist; the construction is broken")
    return CounterexampleReport(K, problem, result)


# ---------------------------------------------------------------------------
# Certificate serialization


CERTIFICATE_SCHEMA = {
    "type": "object",
    "required": ["horn", "result", "witness", "certificate"],
    "additionalProperties": False,
    "properties": {
        "horn": {
            "type": "object",
            "required": ["n", "k", "faces"],
            "additionalProperties": False,
            "properties": {
                "n": {"type": "integer"},
                "k": {"type": "integer"},
                "faces": {
                    "type": "object",
                    "patternProperties": {
                        "^[0-9]+$": {
                            "type": "array",
                            "items": {
                                "anyOf": [{"type": "integer"}, {"type": "string"}]
                            },
                        }
                    },
                    "additionalProperties": False,
                },
            },
        },
        "result": {"enum": ["filler", "no_filler"]},
        "witness": {
            "anyOf": [
                {"type": "null"},
                {
                    "type": "array",
                    "items": {"anyOf": [{"type": "integer"}, {"type": "string"}]},
                },
            ]
        },
        "certificate": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["step", "equation"],
                "additionalProperties": False,
                "properties": {
                    "step": {"enum": ["assign", "contradiction", "exhausted"]},
                    "variable": {"anyOf": [{"type": "string"}, {"type": "null"}]},
                    "equation": {"type": "string"},
                    "value": {"anyOf": [{"type": "integer"}, {"type": "null"}]},
                },
            },
        },
    },
}


def certificate_json(problem: HornProblem, result: FillerResult) -> dict:
    """Render a decision in the documented JSON certificate layout.

    Coefficient coordinates serialize as integers; simplex identifiers of
    finite simplicial-set targets serialize as their display strings.
    """
    witness = None
    if result.found:
        if isinstance(result.filler, EMSimplex):
            witness = list(result.filler.coords)
        else:
            witness = [render_id(result.filler)]
    faces = {}
    for i, x in sorted(problem.faces.items()):
        if isinstance(x, EMSimplex):
            faces[str(i)] = list(x.coords)
        else:
            faces[str(i)] = [render_id(x)]
    return {
        "horn": {"n": problem.n, "k": problem.k, "faces": faces},
        "result": "filler" if result.found else "no_filler",
        "witness": witness,
        "certificate": [
            {
                "step": s.kind,
                "variable": s.variable,
                "equation": s.equation,
                "value": s.value,
            }
            for s in result.steps
        ],
    }


# ---------------------------------------------------------------------------
# Sweeps


def iter_compatible_horn_data(
    target: Target, n: int, k: int, bound: Optional[int] = None
) -> Iterator[HornProblem]:
    """Every compatible horn assignment, in canonical order.

    Candidate faces are enumerated per given index and extended one at a
    time; a projection onto the faces shared with earlier choices prunes the
    search, so only compatible tuples are ever completed.  For infinite
    coefficient monoids the candidate coordinates are capped at ``bound``.
    """
    given = [i for i in range(n + 1) if i != k]
    if isinstance(target, EMSpace):
        candidates = target.enumerate_level(
            n - 1, bound=None if target.monoid.is_finite else bound
        )
    else:
        candidates = list(target.level(n - 1))

    if n == 1:
        for x in candidates:
            yield HornProblem(target, n, k, {given[0]: x})
        return

    projections = []
    cand_faces = [
        {i: target.face(n - 1, i, x) for i in range(n)} for x in candidates
    ]
    for pos in range(len(given)):
        earlier = given[:pos]
        table: dict = {}
        for idx, x in enumerate(candidates):
            key = tuple(cand_faces[idx][a] for a in earlier)
            table.setdefault(key, []).append(idx)
        projections.append(table)

    chosen: list[int] = []

    def extend(pos: int) -> Iterator[HornProblem]:
        if pos == len(given):
            faces = {given[q]: candidates[chosen[q]] for q in range(len(given))}
            yield HornProblem(target, n, k, faces)
            return
        b = given[pos]
        required = tuple(cand_faces[chosen[q]][b - 1] for q in range(pos))
        for idx in projections[pos].get(required, []):
            chosen.append(idx)
            yield from extend(pos + 1)
            chosen.pop()

    yield from extend(0)


@dataclass
class SweepReport:
    target: str
    mode: str
    max_dim: int
    bound: Optional[int]
    instances: int
    passed: bool
    witness: Optional[HornProblem] = None
    witness_result: Optional[FillerResult] = None
    unique: Optional[bool] = None
    nonunique_witness: Optional[HornProblem] = None

    def summary(self) -> str:
        status = "pass" if self.passed else "FAIL"
        head = (
            f"{self.mode} sweep of {self.target} up to dimension {self.max_dim}: "
            f"{status} ({self.instances} horn instances"
        )
        head += ")" if self.bound is None else f", coordinate bound {self.bound})"
        lines = [head]
        if self.witness is not None:
            lines.append(f"counterexample: {self.witness.describe()}")
            for i, x in sorted(self.witness.faces.items()):
                if isinstance(x, EMSimplex):
                    lines.append(f"  face {i}: {list(x.coords)}")
                else:
                    lines.append(f"  face {i}: {render_id(x)}")
            for step in self.witness_result.steps:
                lines.append(f"  {step.kind}: {step.equation}")
        if self.unique is not None:
            lines.append(
                "fillers unique" if self.unique else "fillers NOT unique"
            )
        return "\n".join(lines)

    def to_json(self) -> dict:
        data = {
            "target": self.target,
            "mode": self.mode,
            "max_dim": self.max_dim,
            "bound": self.bound,
            "instances": self.instances,
            "pass": self.passed,
            "witness": None,
            "unique": self.unique,
        }
        if self.witness is not None:
            data["witness"] = certificate_json(self.witness, self.witness_result)
        return data


def _decide(target: Target, problem: HornProblem) -> FillerResult:
    if isinstance(target, EMSpace):
        return solve_em(build_constraints(target, problem))
    return brute_force_filler(target, problem)


def _sweep(
    target: Target,
    max_dim: int,
    bound: Optional[int],
    inner_only: bool,
    check_unique: bool = False,
) -> SweepReport:
    mode = "quasicategory" if inner_only else "kan"
    name = target.name
    instances = 0
    unique: Optional[bool] = True if check_unique else None
    nonunique: Optional[HornProblem] = None
    top = min(max_dim, target.dim_bound)
    for n in range(1, top + 1):
        ks = range(1, n) if inner_only else range(n + 1)
        for k in ks:
            for problem in iter_compatible_horn_data(target, n, k, bound=bound):
                instances += 1
                result = _decide(target, problem)
                if not result.found:
                    return SweepReport(
                        name, mode, max_dim, bound, instances, False,
                        witness=problem, witness_result=result,
                        unique=unique, nonunique_witness=nonunique,
                    )
                if check_unique and n >= 2 and isinstance(target, EMSpace):
                    count = count_fillers(build_constraints(target, problem))
                    if count > 1 and nonunique is None:
                        unique = False
                        nonunique = problem
    return SweepReport(
        name, mode, max_dim, bound, instances, True,
        unique=unique, nonunique_witness=nonunique,
    )


def sweep_quasicategory(
    target: Target,
    max_dim: int,
    bound: Optional[int] = 3,
    check_unique: bool = False,
) -> SweepReport:
    """Decide every compatible inner horn up to ``max_dim``.

    Over infinite coefficients the bound caps face coordinates, so a pass
    is bounded evidence, never a proof; a failure is a genuine witness.
    """
    return _sweep(target, max_dim, bound, inner_only=True, check_unique=check_unique)


def sweep_kan(
    target: Target, max_dim: int, bound: Optional[int] = 3
) -> SweepReport:
    """Like the inner sweep but covering outer horns as well."""
    return _sweep(target, max_dim, bound, inner_only=False)
