"""The ``.scalg`` structure-constant format: parsing and canonical serialization.

One directive per line, ``#`` starts a comment, indices are 0-based and
scalars are integers or ``p/q``.  Repeated entries for one index tuple are
summed.  Besides ``hopf``, ``algebra``, ``action``, ``group`` and ``grading``
objects, a ``yd`` object (``object yd <name> hopf <H>``) stores a
Yetter-Drinfeld module or algebra with ``act``, ``coact``, ``mul`` and
``unit`` entries.  An action whose ``hopf`` reference names a group acts
through the group algebra of that group.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from gmpy2 import mpq

from .exact_linalg import QQ, Field
from .hopf import HopfAlgebraData, NoAntipode, make_hopf
from .modalg import AlgebraData, BuilderError, GroupData, ModuleAlgebraData, graded_algebra, group_hopf
from .yd import YDAlgebraData, YDModuleData


class ScalgError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


# entry name -> number of indices, per object kind
ENTRY_ARITY = {
    "hopf": {"unit": 1, "counit": 1, "mul": 3, "comul": 3, "antipode": 2},
    "algebra": {"unit": 1, "mul": 3},
    "action": {"act": 3},
    "yd": {"act": 3, "coact": 3, "mul": 3, "unit": 1},
    "group": {},
    "grading": {},
}
REFS = {
    "hopf": (),
    "algebra": (),
    "group": (),
    "action": ("hopf", "algebra"),
    "grading": ("group", "algebra"),
    "yd": ("hopf",),
}


@dataclass
class ScalgObject:
    kind: str
    name: str
    refs: dict[str, str] = field(default_factory=dict)
    dim: int | None = None
    order: int | None = None
    entries: dict[str, dict[tuple[int, ...], object]] = field(default_factory=dict)
    rows: dict[int, tuple[int, ...]] = field(default_factory=dict)
    degs: dict[int, int] = field(default_factory=dict)
    line: int = 0


@dataclass
class ScalgDocument:
    field: Field
    objects: dict[str, ScalgObject]

    def of_kind(self, *kinds: str) -> list[ScalgObject]:
        return [o for o in self.objects.values() if o.kind in kinds]


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ScalgError(f"expected an integer, got {tok!r}", lineno) from None


def _scalar(fld: Field, tok: str, lineno: int):
    try:
        return fld(mpq(tok))
    except (ValueError, ZeroDivisionError):
        raise ScalgError(f"bad scalar {tok!r}", lineno) from None


def _slot_sizes(doc: ScalgDocument, obj: ScalgObject, name: str) -> tuple[int, ...]:
    """Index bounds for one entry kind of ``obj``."""
    d = obj.dim
    if obj.kind in ("hopf", "algebra"):
        return (d,) * ENTRY_ARITY[obj.kind][name]
    if obj.kind == "action":
        return (_size(doc.objects[obj.refs["hopf"]]), _algebra_dim(doc, obj.refs["algebra"]), _algebra_dim(doc, obj.refs["algebra"]))
    if obj.kind == "yd":
        n = doc.objects[obj.refs["hopf"]].dim
        return {"act": (n, d, d), "coact": (d, n, d), "mul": (d, d, d), "unit": (d,)}[name]
    raise AssertionError(obj.kind)


def _size(obj: ScalgObject) -> int:
    return obj.order if obj.kind == "group" else obj.dim


def _algebra_dim(doc: ScalgDocument, name: str) -> int:
    return doc.objects[name].dim


def parse_scalg(text: str) -> ScalgDocument:
    fld: Field | None = None
    objects: dict[str, ScalgObject] = {}
    doc = ScalgDocument(QQ, objects)
    cur: ScalgObject | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = raw.split("#", 1)[0].split()
        if not toks:
            continue
        head, args = toks[0], toks[1:]
        if head == "scalars":
            if cur is not None or objects or fld is not None:
                raise ScalgError("scalars must be declared once, before any object", lineno)
            if args == ["rational"]:
                fld = QQ
            elif len(args) == 2 and args[0] == "gf":
                p = _int(args[1], lineno)
                try:
                    fld = Field(p)
                except ValueError:
                    raise ScalgError(f"modulus not prime: {p}", lineno) from None
            else:
                raise ScalgError(f"unknown field descriptor {' '.join(args)!r}", lineno)
            doc.field = fld
            continue
        if head == "object":
            if cur is not None:
                raise ScalgError("object opened before the previous one was closed with 'end'", lineno)
            if fld is None:
                raise ScalgError("missing 'scalars' declaration", lineno)
            if len(args) < 2 or args[0] not in REFS:
                raise ScalgError(f"bad object header {' '.join(args)!r}", lineno)
            kind, name = args[0], args[1]
            if name in objects:
                raise ScalgError(f"duplicate object name {name!r}", lineno)
            rest = args[2:]
            if len(rest) != 2 * len(REFS[kind]):
                raise ScalgError(f"object {kind} expects references {REFS[kind]}", lineno)
            refs = {}
            for key, val in zip(rest[::2], rest[1::2]):
                if key not in REFS[kind] or key in refs:
                    raise ScalgError(f"unexpected reference {key!r}", lineno)
                target = objects.get(val)
                allowed = {"hopf": ("hopf", "group") if kind == "action" else ("hopf",), "algebra": ("algebra",), "group": ("group",)}[key]
                if target is None or target.kind not in allowed:
                    raise ScalgError(f"unknown {key} object {val!r}", lineno)
                refs[key] = val
            cur = ScalgObject(kind, name, refs, line=lineno)
            if kind == "action":
                cur.dim = objects[refs["algebra"]].dim
            if kind == "grading":
                cur.dim = objects[refs["algebra"]].dim
            continue
        if cur is None:
            raise ScalgError(f"directive {head!r} outside an object", lineno)
        if head == "end":
            _finish(doc, cur, lineno)
            objects[cur.name] = cur
            cur = None
            continue
        if head == "dim":
            if cur.kind not in ("hopf", "algebra", "yd") or cur.dim is not None or len(args) != 1:
                raise ScalgError("unexpected 'dim'", lineno)
            cur.dim = _int(args[0], lineno)
            if cur.dim < 0:
                raise ScalgError("negative dimension", lineno)
            continue
        if head == "order":
            if cur.kind != "group" or cur.order is not None or len(args) != 1:
                raise ScalgError("unexpected 'order'", lineno)
            cur.order = _int(args[0], lineno)
            if cur.order < 1:
                raise ScalgError("group order must be positive", lineno)
            continue
        if head == "row":
            if cur.kind != "group" or cur.order is None:
                raise ScalgError("'row' needs a group object with 'order' first", lineno)
            if len(args) != cur.order + 1:
                raise ScalgError(f"'row' expects an index and {cur.order} entries", lineno)
            vals = [_int(t, lineno) for t in args]
            if not 0 <= vals[0] < cur.order or any(not 0 <= v < cur.order for v in vals[1:]):
                raise ScalgError("index out of range", lineno)
            if vals[0] in cur.rows:
                raise ScalgError(f"duplicate row {vals[0]}", lineno)
            cur.rows[vals[0]] = tuple(vals[1:])
            continue
        if head == "deg":
            if cur.kind != "grading" or len(args) != 2:
                raise ScalgError("unexpected 'deg'", lineno)
            i, g = _int(args[0], lineno), _int(args[1], lineno)
            if not 0 <= i < cur.dim or not 0 <= g < objects[cur.refs["group"]].order:
                raise ScalgError("index out of range", lineno)
            if i in cur.degs:
                raise ScalgError(f"duplicate degree for basis vector {i}", lineno)
            cur.degs[i] = g
            continue
        arity = ENTRY_ARITY[cur.kind].get(head)
        if arity is None:
            raise ScalgError(f"unknown directive {head!r} in {cur.kind} object", lineno)
        if len(args) != arity + 1:
            raise ScalgError(f"'{head}' expects {arity} indices and a scalar", lineno)
        if cur.dim is None:
            raise ScalgError("'dim' must come before entries", lineno)
        idx = tuple(_int(t, lineno) for t in args[:arity])
        bounds = _slot_sizes(doc, cur, head)
        if any(not 0 <= i < b for i, b in zip(idx, bounds)):
            raise ScalgError("index out of range", lineno)
        c = _scalar(fld, args[arity], lineno)
        bucket = cur.entries.setdefault(head, {})
        bucket[idx] = bucket[idx] + c if idx in bucket else c
    if cur is not None:
        raise ScalgError(f"object {cur.name!r} is not terminated by 'end'", cur.line)
    if fld is None:
        raise ScalgError("missing 'scalars' declaration")
    return doc


def _finish(doc: ScalgDocument, obj: ScalgObject, lineno: int) -> None:
    if obj.kind in ("hopf", "algebra", "yd") and obj.dim is None:
        raise ScalgError(f"object {obj.name!r} has no 'dim'", lineno)
    if obj.kind == "group":
        if obj.order is None or len(obj.rows) != obj.order:
            raise ScalgError(f"group {obj.name!r} needs 'order' and one 'row' per element", lineno)
    if obj.kind == "grading" and len(obj.degs) != obj.dim:
        raise ScalgError(f"grading {obj.name!r} needs one 'deg' per basis vector", lineno)


# building


def _dense(fld: Field, obj: ScalgObject, name: str, shape) -> np.ndarray:
    a = fld.zeros(*shape)
    for idx, c in obj.entries.get(name, {}).items():
        a[idx] = c
    return a


def build_object(doc: ScalgDocument, name: str, cache: dict | None = None):
    """Turn one named object into library data, resolving references."""
    cache = {} if cache is None else cache
    if name in cache:
        return cache[name]
    obj = doc.objects[name]
    fld = doc.field
    d = obj.dim
    if obj.kind == "hopf":
        anti = _dense(fld, obj, "antipode", (d, d)) if "antipode" in obj.entries else None
        try:
            out = make_hopf(
                fld,
                _dense(fld, obj, "mul", (d, d, d)),
                _dense(fld, obj, "unit", (d,)),
                _dense(fld, obj, "comul", (d, d, d)),
                _dense(fld, obj, "counit", (d,)),
                anti,
            )
        except NoAntipode as exc:
            raise BuilderError(f"hopf {name}: {exc}") from None
    elif obj.kind == "algebra":
        out = AlgebraData(fld, _dense(fld, obj, "mul", (d, d, d)), _dense(fld, obj, "unit", (d,)))
    elif obj.kind == "group":
        out = GroupData.from_table([obj.rows[i] for i in range(obj.order)])
    elif obj.kind == "action":
        H = build_object(doc, obj.refs["hopf"], cache)
        if isinstance(H, GroupData):
            H = group_hopf(H, fld)
        A = build_object(doc, obj.refs["algebra"], cache)
        out = ModuleAlgebraData(H, A, _dense(fld, obj, "act", (H.dim, A.dim, A.dim)))
    elif obj.kind == "grading":
        G = build_object(doc, obj.refs["group"], cache)
        A = build_object(doc, obj.refs["algebra"], cache)
        out = graded_algebra(G, A, [obj.degs[i] for i in range(d)])
    elif obj.kind == "yd":
        H = build_object(doc, obj.refs["hopf"], cache)
        act = _dense(fld, obj, "act", (H.dim, d, d))
        co = _dense(fld, obj, "coact", (d, H.dim, d))
        if "mul" in obj.entries or "unit" in obj.entries:
            out = YDAlgebraData(H, act, co, _dense(fld, obj, "mul", (d, d, d)), _dense(fld, obj, "unit", (d,)))
        else:
            out = YDModuleData(H, act, co)
    else:  # pragma: no cover
        raise AssertionError(obj.kind)
    cache[name] = out
    return out


def build_all(doc: ScalgDocument) -> dict:
    cache: dict = {}
    for name in doc.objects:
        build_object(doc, name, cache)
    return cache


# serialization


def _entry_lines(fld: Field, name: str, a: np.ndarray) -> list[str]:
    out = []
    for idx in sorted(tuple(int(i) for i in t) for t in np.argwhere(a != 0)):
        out.append(" ".join([name, *map(str, idx), fld.format(a[idx])]))
    return out


class Serializer:
    """Accumulates objects into one canonical document; referenced objects are emitted first."""

    def __init__(self, fld: Field):
        self.field = fld
        self.blocks: list[str] = []
        self.names: dict[int, str] = {}
        self.used: set[str] = set()

    def _fresh(self, base: str) -> str:
        name, k = base, 1
        while name in self.used:
            k += 1
            name = f"{base}{k}"
        self.used.add(name)
        return name

    def _name(self, obj, base: str) -> tuple[str, bool]:
        key = id(obj)
        if key in self.names:
            return self.names[key], False
        self.names[key] = self._fresh(base)
        return self.names[key], True

    def _emit(self, header: str, body: list[str]) -> None:
        self.blocks.append("\n".join([f"object {header}", *body, "end"]))

    def hopf(self, H: HopfAlgebraData, base: str = "H") -> str:
        name, new = self._name(H, base)
        if new:
            f = self.field
            body = [f"dim {H.dim}"]
            for key, arr in (("unit", H.unit), ("counit", H.counit), ("mul", H.mul), ("comul", H.comul), ("antipode", H.antipode)):
                body += _entry_lines(f, key, arr)
            self._emit(f"hopf {name}", body)
        return name

    def algebra(self, A: AlgebraData, base: str = "A") -> str:
        name, new = self._name(A, base)
        if new:
            body = [f"dim {A.dim}", *_entry_lines(self.field, "unit", A.unit), *_entry_lines(self.field, "mul", A.mul)]
            self._emit(f"algebra {name}", body)
        return name

    def group(self, G: GroupData, base: str = "G") -> str:
        name, new = self._name(G, base)
        if new:
            body = [f"order {G.order}"] + [f"row {i} " + " ".join(map(str, r)) for i, r in enumerate(G.table)]
            self._emit(f"group {name}", body)
        return name

    def action(self, M: ModuleAlgebraData, base: str = "M", group: GroupData | None = None) -> str:
        """Emit M; with ``group`` the action refers to the group, read as k[G]."""
        h = self.group(group) if group is not None else self.hopf(M.hopf)
        a = self.algebra(M.alg)
        name, new = self._name(M, base)
        if new:
            self._emit(f"action {name} hopf {h} algebra {a}", _entry_lines(self.field, "act", M.action))
        return name

    def yd(self, Y: YDModuleData, base: str = "Z") -> str:
        h = self.hopf(Y.hopf)
        name, new = self._name(Y, base)
        if new:
            f = self.field
            body = [f"dim {Y.dim}", *_entry_lines(f, "act", Y.action), *_entry_lines(f, "coact", Y.coaction)]
            if isinstance(Y, YDAlgebraData):
                body += _entry_lines(f, "unit", Y.unit) + _entry_lines(f, "mul", Y.mul)
            self._emit(f"yd {name} hopf {h}", body)
        return name

    def grading(self, G: GroupData, A: AlgebraData, degrees, base: str = "grading") -> str:
        g = self.group(G)
        a = self.algebra(A)
        name = self._fresh(base)
        body = [f"deg {i} {d}" for i, d in enumerate(degrees)]
        self._emit(f"grading {name} group {g} algebra {a}", body)
        return name

    def text(self) -> str:
        head = "scalars rational" if self.field.is_rational else f"scalars gf {self.field.p}"
        return "\n".join([head, *self.blocks]) + "\n"


def serialize(*objs, field: Field | None = None) -> str:
    """Canonical text for Hopf algebras, algebras, groups, module algebras and YD modules/algebras."""
    fld = field
    if fld is None:
        for o in objs:
            fld = getattr(o, "field", None)
            if fld is not None:
                break
    s = Serializer(fld or QQ)
    for o in objs:
        if isinstance(o, HopfAlgebraData):
            s.hopf(o)
        elif isinstance(o, ModuleAlgebraData):
            s.action(o)
        elif isinstance(o, YDModuleData):
            s.yd(o)
        elif isinstance(o, AlgebraData):
            s.algebra(o)
        elif isinstance(o, GroupData):
            s.group(o)
        else:
            raise TypeError(f"cannot serialize {type(o).__name__}")
    return s.text()
