"""Membership, smoothness, and singularity certificates for the variety of
orthogonal vertex assignments of a graph.

Given a graph G and a bilinear space (F^n, <.,.>), the variety consists of
all maps w from vertices to F^n with <w(u), w(v)> = 0 for every edge {u, v}.
It lives in affine space of dimension |V| * n and its expected dimension is
|V| * n - |E|.

A member point is smooth exactly when the Jacobian of the edge equations has
full row rank |E| there.  A rank defect is witnessed by a nonzero left-kernel
vector of the Jacobian, one scalar per edge; such a vector is what we hand
out as a singularity certificate, and it can be re-checked independently of
any matrix computation via one vector identity per vertex.
"""

from dataclasses import dataclass

from .errors import NotOnVarietyError
from .graphs import degeneracy_order, has_even_cycle, is_forest
from .linalg import Matrix, vectors_independent


class VertexAssignment:
    """One vector per vertex, all over the same field."""

    def __init__(self, field, vectors):
        self.field = field
        self.vectors = tuple(tuple(field(x) for x in vec) for vec in vectors)

    @classmethod
    def zero(cls, field, num_vertices, n):
        z = field.zero()
        return cls(field, [[z] * n for _ in range(num_vertices)])

    @property
    def num_vertices(self):
        return len(self.vectors)

    def vector(self, v):
        return self.vectors[v]

    def __eq__(self, other):
        return (
            isinstance(other, VertexAssignment)
            and self.field == other.field
            and self.vectors == other.vectors
        )

    def __repr__(self):
        return f"VertexAssignment({self.field!r}, {self.num_vertices} vectors)"


class VarietyContext:
    """A graph, a bilinear space, and the canonical edge order between them."""

    def __init__(self, graph, space):
        self.graph = graph
        self.space = space
        self.edge_order = graph.edges

    @property
    def field(self):
        return self.space.field

    @property
    def expected_dimension(self):
        return self.graph.num_vertices * self.space.n - self.graph.num_edges


def expected_dimension(graph, space):
    return graph.num_vertices * space.n - graph.num_edges


def _check_shape(ctx, assignment):
    if assignment.field != ctx.field:
        raise ValueError("assignment field does not match the space's field")
    if assignment.num_vertices != ctx.graph.num_vertices:
        raise ValueError("assignment has the wrong number of vertices")
    for vec in assignment.vectors:
        if len(vec) != ctx.space.n:
            raise ValueError("assignment vector has the wrong length")


def residual(ctx, assignment):
    """The tuple of edge form values <w(lo), w(hi)>, in canonical edge order."""
    _check_shape(ctx, assignment)
    w = assignment.vectors
    return tuple(ctx.space.pair(w[lo], w[hi]) for lo, hi in ctx.edge_order)


def is_member(ctx, assignment):
    return all(r == 0 for r in residual(ctx, assignment))


def jacobian(ctx, assignment):
    """The |E| x (|V| * n) Jacobian of the edge equations at the assignment.

    The row of edge (lo, hi) carries gram * w(hi) in lo's coordinate block and
    gram^T * w(lo) in hi's block.
    """
    _check_shape(ctx, assignment)
    n = ctx.space.n
    w = assignment.vectors
    z = ctx.field.zero()
    rows = []
    for lo, hi in ctx.edge_order:
        row = [z] * (ctx.graph.num_vertices * n)
        for k, x in enumerate(ctx.space.gram_times(w[hi])):
            row[lo * n + k] = row[lo * n + k] + x
        for k, x in enumerate(ctx.space.gram_transpose_times(w[lo])):
            row[hi * n + k] = row[hi * n + k] + x
        rows.append(row)
    m = Matrix(ctx.field, rows)
    if not rows:
        m = Matrix.zeros(ctx.field, 0, ctx.graph.num_vertices * n)
    return m


def is_smooth_point(ctx, assignment):
    """Whether the Jacobian has full row rank |E| at a member point."""
    if not is_member(ctx, assignment):
        raise NotOnVarietyError("smoothness is only defined at member points")
    return jacobian(ctx, assignment).rank() == ctx.graph.num_edges


@dataclass(frozen=True)
class SingularityCertificate:
    """A nonzero edge weighting in the left kernel of the Jacobian."""

    edges: tuple
    values: tuple

    def value_on(self, lo, hi):
        return self.values[self.edges.index((lo, hi))]


def verify_certificate(ctx, assignment, certificate):
    """Check a certificate from first principles, without rank computations.

    The certificate is valid when the assignment is a member, the edge values
    are not all zero, and for every vertex v the weighted sum of the incident
    edge gradients restricted to v's block vanishes:

        sum over edges e = (lo, hi) at v of
            value(e) * (gram * w(hi))     if v == lo
            value(e) * (gram^T * w(lo))   if v == hi
    """
    _check_shape(ctx, assignment)
    if tuple(certificate.edges) != tuple(ctx.edge_order):
        return False
    if len(certificate.values) != len(ctx.edge_order):
        return False
    if not is_member(ctx, assignment):
        return False
    if all(v == 0 for v in certificate.values):
        return False
    n = ctx.space.n
    w = assignment.vectors
    z = ctx.field.zero()
    for v in range(ctx.graph.num_vertices):
        acc = [z] * n
        for (lo, hi), lam in zip(ctx.edge_order, certificate.values):
            if v == lo:
                grad = ctx.space.gram_times(w[hi])
            elif v == hi:
                grad = ctx.space.gram_transpose_times(w[lo])
            else:
                continue
            acc = [a + lam * g for a, g in zip(acc, grad)]
        if any(a != 0 for a in acc):
            return False
    return True


def singular_certificate(ctx, assignment):
    """A singularity certificate at a member point, or None when smooth.

    The returned certificate is re-verified through `verify_certificate`
    before being handed back, so the two code paths cross-check each other.
    """
    if not is_member(ctx, assignment):
        raise NotOnVarietyError("certificates are only defined at member points")
    basis = jacobian(ctx, assignment).left_kernel_basis()
    if not basis:
        return None
    cert = SingularityCertificate(edges=tuple(ctx.edge_order), values=tuple(basis[0]))
    if not verify_certificate(ctx, assignment, cert):
        raise AssertionError("internal error: left-kernel vector failed re-verification")
    return cert


def regular_part_test(og, assignment):
    """Whether the assignment lies in the regular part for the given order.

    For every vertex, the vectors assigned to its older neighbors must be
    linearly independent.  Membership in the variety is not required; the two
    tests are independent.
    """
    if assignment.num_vertices != og.graph.num_vertices:
        raise ValueError("assignment has the wrong number of vertices")
    w = assignment.vectors
    if og.graph.num_vertices == 0:
        return True
    length = len(w[0])
    for v in range(og.graph.num_vertices):
        older = og.older_neighbors(v)
        vecs = [w[u] for u in older]
        if not vectors_independent(assignment.field, vecs, length):
            return False
    return True


@dataclass(frozen=True)
class EdgeEquation:
    """One edge equation as a sparse list of (i, j, coeff) bilinear terms.

    Term (i, j, c) stands for c * x_{lo,i} * x_{hi,j} for the edge (lo, hi).
    """

    edge: tuple
    terms: tuple


def equations(ctx):
    """The defining equations, one per edge in canonical order."""
    gram = ctx.space.gram.rows
    n = ctx.space.n
    out = []
    for lo, hi in ctx.edge_order:
        terms = tuple(
            (i, j, gram[i][j])
            for i in range(n)
            for j in range(n)
            if gram[i][j] != 0
        )
        out.append(EdgeEquation(edge=(lo, hi), terms=terms))
    return out


def canonical_degrees(graph, n):
    """The canonical-class degree at each vertex factor: -n + deg(v)."""
    return tuple(-n + graph.degree(v) for v in range(graph.num_vertices))


def is_anti_ample(degrees):
    """Whether every canonical degree is negative (anti-canonical class ample)."""
    return all(d < 0 for d in degrees)


@dataclass(frozen=True)
class ProjectiveVerdict:
    """What is known about singular points away from the zero locus.

    verdict is "smooth", "singular", or "unknown"; hypothesis_met records
    whether the ambient dimension is large enough (relative to degeneracy and
    max degree) for the dimension-theoretic parts of the analysis to apply.
    """

    verdict: str
    hypothesis_met: bool


def projective_smoothness(graph, n, kind):
    """Classify smoothness of the projectivized variety (zero locus removed).

    Forests give smooth varieties.  A symplectic space of dimension at least 4
    turns any cycle into a singular point; over a symmetric space the same
    holds once the graph has an even cycle.  Anything else is reported unknown
    rather than guessed.  hypothesis_met records whether n is large enough
    (degeneracy + max degree - 1) for the verdict to carry its full geometric
    meaning; the rank facts behind it hold either way.
    """
    if kind not in ("symplectic", "symmetric"):
        raise ValueError(f"unknown form kind {kind!r}")
    d = degeneracy_order(graph)[1]
    big_d = graph.max_degree()
    hypothesis_met = n >= d + big_d - 1
    if is_forest(graph):
        return ProjectiveVerdict("smooth", hypothesis_met)
    if kind == "symplectic" and n >= 4:
        return ProjectiveVerdict("singular", hypothesis_met)
    if kind == "symmetric" and has_even_cycle(graph):
        return ProjectiveVerdict("singular", hypothesis_met)
    return ProjectiveVerdict("unknown", hypothesis_met)
