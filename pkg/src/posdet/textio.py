"""Text format for rings, ideals and modules.

::

    ring a,b,c,d;
    I = a^4*d^4, a^2*b^3, b^3*c^2, b^3*d;
    J = a^3*d^3, a^3*b, b^2;
    module quotient J I t=(4,3,2,4);

A presentation (0-based entry indices, the monomial is optional but checked)::

    ring x,y;
    module presentation t=(2,1);
    rows (0,0);
    cols (2,0), (1,1);
    (0,0) = 1 * x^(2,0);
    (0,1) = 1 * x^(1,1);

Statements end with ``;``, ``#`` starts a comment, whitespace is ignored.
Several ``module`` statements are combined by direct sum.  In ``module
quotient J I`` either name may be ``S`` or ``1`` (unit ideal) or ``0``.
"""

import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .ideals import MonomialIdeal, monomial_text
from .lattice import cmax, leq, zero
from .linalg import QQ
from .boxmod import (
    MonomialMatrix, from_ideal_pair, from_presentation, direct_sum, extend_window,
)

__all__ = ["Document", "QuotientSpec", "PresentationSpec", "parse", "parse_file",
           "parse_monomial", "build_module", "document_text"]


class ParseError(ValueError):
    pass


@dataclass
class QuotientSpec:
    J: str
    I: str
    t: tuple = None


@dataclass
class PresentationSpec:
    t: tuple
    rows: list = dc_field(default_factory=list)
    cols: list = dc_field(default_factory=list)
    entries: dict = dc_field(default_factory=dict)


@dataclass
class Document:
    names: list
    ideals: dict = dc_field(default_factory=dict)
    modules: list = dc_field(default_factory=list)

    @property
    def n(self):
        return len(self.names)

    def ideal(self, name):
        if name in ("S", "1"):
            return MonomialIdeal.unit(self.n)
        if name == "0":
            return MonomialIdeal.zero_ideal(self.n)
        if name not in self.ideals:
            raise ParseError(f"undefined ideal {name!r}")
        return self.ideals[name]


_VEC = r"\(\s*-?\d+(?:\s*,\s*-?\d+)*\s*\)"


def _vector(text):
    text = text.strip()
    if not re.fullmatch(_VEC, text):
        raise ParseError(f"bad vector {text!r}")
    return tuple(int(x) for x in text.strip("()").split(","))


def _vector_list(text):
    return [_vector(m) for m in re.findall(_VEC, text)]


def parse_monomial(text, names):
    text = text.strip()
    exps = [0] * len(names)
    if text == "1":
        return tuple(exps)
    for factor in text.split("*"):
        factor = factor.strip()
        m = re.fullmatch(r"([A-Za-z_]\w*)\s*(?:\^\s*(\d+))?", factor)
        if not m or m.group(1) not in names:
            raise ParseError(f"bad factor {factor!r} in monomial {text!r}")
        exps[names.index(m.group(1))] += int(m.group(2) or 1)
    return tuple(exps)


def parse(text):
    text = "\n".join(line.split("#", 1)[0] for line in text.splitlines())
    statements = [s.strip() for s in text.split(";") if s.strip()]
    doc = None
    current = None
    for st in statements:
        flat = " ".join(st.split())
        if flat.startswith("ring "):
            names = [v.strip() for v in flat[5:].split(",")]
            if not all(re.fullmatch(r"[A-Za-z_]\w*", v) for v in names):
                raise ParseError(f"bad variable list {flat!r}")
            doc = Document(names)
            continue
        if doc is None:
            raise ParseError("the first statement must declare the ring")
        if flat.startswith("module "):
            m = re.fullmatch(r"module quotient (\S+) (\S+)(?: t=\s*(" + _VEC + r"))?", flat)
            if m:
                t = _vector(m.group(3)) if m.group(3) else None
                doc.modules.append(QuotientSpec(m.group(1), m.group(2), t))
                current = None
                continue
            m = re.fullmatch(r"module presentation t=\s*(" + _VEC + ")", flat)
            if m:
                current = PresentationSpec(_vector(m.group(1)))
                doc.modules.append(current)
                continue
            raise ParseError(f"bad module statement {flat!r}")
        if re.match(r"(rows|cols)\b", flat):
            if current is None:
                raise ParseError(f"{flat[:4]} outside a presentation")
            vecs = _vector_list(flat[4:])
            if flat.startswith("rows"):
                current.rows = vecs
            else:
                current.cols = vecs
            continue
        m = re.fullmatch(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*=\s*([-+]?[\d/]+)"
                         r"(?:\s*\*\s*x\^\s*(" + _VEC + "))?", flat)
        if m:
            if current is None:
                raise ParseError("entry outside a presentation")
            jk = (int(m.group(1)), int(m.group(2)))
            exp = _vector(m.group(4)) if m.group(4) else None
            current.entries[jk] = (Fraction(m.group(3)), exp)
            continue
        m = re.fullmatch(r"([A-Za-z_]\w*)\s*=\s*(.*)", flat)
        if m:
            body = m.group(2).strip()
            gens = [] if body == "0" else [parse_monomial(g, doc.names) for g in body.split(",")]
            doc.ideals[m.group(1)] = MonomialIdeal(doc.n, gens)
            continue
        raise ParseError(f"cannot parse statement {flat!r}")
    if doc is None:
        raise ParseError("empty document")
    return doc


def parse_file(path):
    with open(path) as fh:
        return parse(fh.read())


def _presentation_matrix(spec, field):
    entries = {}
    for (j, k), (c, exp) in spec.entries.items():
        if j >= len(spec.rows) or k >= len(spec.cols):
            raise ParseError(f"entry ({j},{k}) outside the {len(spec.rows)}x{len(spec.cols)} matrix")
        expected = tuple(b - a for a, b in zip(spec.rows[j], spec.cols[k]))
        if exp is not None and exp != expected:
            raise ParseError(f"entry ({j},{k}) has monomial x^{exp}, shifts force x^{expected}")
        entries[(j, k)] = c
    return MonomialMatrix(spec.rows, spec.cols, entries, field)


def build_module(doc, field=QQ):
    """The direct sum of all declared modules, on a common box.

    Without module statements, a document with a single ideal I means S/I.
    """
    specs = list(doc.modules)
    if not specs:
        if len(doc.ideals) != 1:
            raise ParseError("no module declared and not exactly one ideal")
        specs = [QuotientSpec("S", next(iter(doc.ideals)))]
    parts = []
    for spec in specs:
        if isinstance(spec, QuotientSpec):
            I, J = doc.ideal(spec.I), doc.ideal(spec.J)
            t = spec.t or cmax(I.tight_bound(), J.tight_bound())
            parts.append(from_ideal_pair(I, J, t, field))
        else:
            parts.append(from_presentation(_presentation_matrix(spec, field), spec.t, field))
    hi = parts[0].hi
    for P in parts[1:]:
        hi = cmax(hi, P.hi)
    parts = [P if P.hi == hi else extend_window(P, hi) for P in parts]
    M = parts[0]
    for P in parts[1:]:
        M = direct_sum(M, P)
    return M


def _vec_text(v):
    return "(" + ",".join(str(x) for x in v) + ")"


def document_text(names, ideals=None, modules=()):
    """Serialize a document; ``modules`` holds QuotientSpec/PresentationSpec/MonomialMatrix."""
    lines = [f"ring {','.join(names)};"]
    for name, I in (ideals or {}).items():
        body = ", ".join(monomial_text(g, names) for g in I.gens) if I.gens else "0"
        lines.append(f"{name} = {body};")
    for spec in modules:
        if isinstance(spec, QuotientSpec):
            t = f" t={_vec_text(spec.t)}" if spec.t else ""
            lines.append(f"module quotient {spec.J} {spec.I}{t};")
        else:
            if isinstance(spec, tuple):
                mm, t = spec
            else:
                mm, t = _presentation_matrix(spec, QQ), spec.t
            lines.append(f"module presentation t={_vec_text(t)};")
            lines.append("rows " + ", ".join(_vec_text(a) for a in mm.row_shifts) + ";")
            lines.append("cols " + ", ".join(_vec_text(b) for b in mm.col_shifts) + ";")
            for (j, k), c in sorted(mm.entries.items()):
                lines.append(f"({j},{k}) = {c} * x^{_vec_text(mm.exponent(j, k))};")
    return "\n".join(lines) + "\n"
