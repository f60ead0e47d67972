"""JSON wire formats.

Every number travels as a decimal string so arbitrarily large integers and
exact rationals survive any JSON parser untouched; booleans stay booleans.
`canonical_dumps` fixes key order and layout, making repeated runs
byte-identical.
"""

import json
from fractions import Fraction

from .fields import FpElement, field_from_spec
from .splitting import VertexWeighting
from .variety import SingularityCertificate, VertexAssignment


def canonical_dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def scalar_to_str(x):
    if isinstance(x, FpElement):
        return str(x.value)
    if isinstance(x, (Fraction, int)):
        return str(x)
    raise TypeError(f"cannot serialize scalar {x!r}")


def field_label(field):
    return field.name


def assignment_to_obj(assignment):
    return {
        "field": field_label(assignment.field),
        "vectors": {
            str(v): [scalar_to_str(x) for x in vec]
            for v, vec in enumerate(assignment.vectors)
        },
    }


def assignment_from_obj(obj):
    field = field_from_spec(obj["field"])
    raw = obj["vectors"]
    keys = sorted(int(k) for k in raw)
    if keys != list(range(len(keys))):
        raise ValueError("vertex keys must be exactly 0..n-1")
    vectors = [[field(x) for x in raw[str(v)]] for v in keys]
    return VertexAssignment(field, vectors)


def certificate_to_obj(certificate, field):
    return {
        "field": field_label(field),
        "weights": [
            [str(lo), str(hi), scalar_to_str(val)]
            for (lo, hi), val in zip(certificate.edges, certificate.values)
        ],
    }


def certificate_from_obj(obj):
    field = field_from_spec(obj["field"])
    edges = []
    values = []
    for lo, hi, val in obj["weights"]:
        edges.append((int(lo), int(hi)))
        values.append(field(val))
    return field, SingularityCertificate(edges=tuple(edges), values=tuple(values))


def weighting_to_obj(weighting):
    return {
        "colors": list(weighting.colors),
        "weights": {
            str(v): [str(x) for x in vec] for v, vec in weighting.weights.items()
        },
    }


def weighting_from_obj(obj):
    return VertexWeighting(
        colors=tuple(obj["colors"]),
        weights={int(v): tuple(int(x) for x in vec) for v, vec in obj["weights"].items()},
    )


def splitting_report_to_obj(report):
    return {
        "valid": report.valid,
        "color_count": str(report.color_count),
        "per_edge": [
            {
                "edge": [str(e.edge[0]), str(e.edge[1])],
                "argmax": list(e.argmax),
                "strict": e.strict,
            }
            for e in report.per_edge
        ],
        "classes": {
            c: [[str(lo), str(hi)] for lo, hi in edges]
            for c, edges in sorted(report.classes.items())
        },
        "matching_flags": dict(sorted(report.matching_flags.items())),
    }


def count_report_to_obj(report):
    return {
        "count": str(report.count),
        "q": str(report.q),
        "expected_dimension": str(report.expected_dimension),
        "ratio": str(report.ratio),
    }


def equations_to_obj(eqs):
    return {
        "equations": [
            {
                "edge": [str(eq.edge[0]), str(eq.edge[1])],
                "terms": [
                    [str(i), str(j), scalar_to_str(c)] for i, j, c in eq.terms
                ],
            }
            for eq in eqs
        ]
    }


def gram_to_obj(space):
    return [[scalar_to_str(x) for x in row] for row in space.gram.rows]


def gram_rows_from_obj(obj, field):
    return [[field(x) for x in row] for row in obj]
