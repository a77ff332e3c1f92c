"""Execute a parsed script against an environment of rings, modules and complexes."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from ..complexes import ChainComplex, euler_check, free_resolution, koszul_complex
from ..duality import cm_dual, dualizing_module, matlis_dual
from ..errors import QhomError
from ..fields import Field
from ..invariants import (
    bass_numbers,
    betti_numbers,
    cm_type,
    depth,
    is_cm,
    is_gorenstein,
    krull_dim,
    projective_dimension,
)
from ..modules import GradedModule, is_isomorphic
from ..polynomials import PolyRing, QuotientRing
from ..quasires import (
    koszul_qpres_residue_field,
    power_lift,
    qid_certified,
    qpd_certified,
    qpres_tensor_down,
)
from .parser import Call, CheckStmt, ComplexStmt, Coker, ModuleStmt, PrintStmt, RingStmt


@dataclass
class Options:
    seed: int = 0
    degree_bound: int = 6
    length_bound: int | None = None
    threads: int = 1

    def bounds(self) -> dict:
        return {"degree": self.degree_bound, "length": self.length_bound}


@dataclass
class Outcome:
    line: int
    statement: str
    text: list = field(default_factory=list)
    record: dict | None = None
    error: str | None = None


class ScriptError(QhomError):
    pass


def _dim(x):
    return "-inf" if x == float("-inf") else int(x)


class Runner:
    def __init__(self, options: Options | None = None):
        self.opts = options or Options()
        self.env: dict = {}

    # name resolution

    def lookup(self, name: str, kind=None):
        if name not in self.env:
            raise ScriptError(f"undefined name {name!r}")
        obj = self.env[name]
        if kind is not None and not isinstance(obj, kind):
            raise ScriptError(f"{name!r} is a {type(obj).__name__}, "
                              f"expected {getattr(kind, '__name__', kind)}")
        return obj

    def ring_of(self, name: str) -> QuotientRing:
        obj = self.lookup(name)
        if isinstance(obj, QuotientRing):
            return obj
        if isinstance(obj, (GradedModule, ChainComplex)):
            return obj.ring
        raise ScriptError(f"{name!r} has no ring")

    def module(self, name: str) -> GradedModule:
        obj = self.lookup(name)
        if isinstance(obj, QuotientRing):
            return GradedModule.free(obj, [0])
        if not isinstance(obj, GradedModule):
            raise ScriptError(f"{name!r} is not a module")
        return obj

    def length(self, M) -> int:
        if self.opts.length_bound is not None:
            return self.opts.length_bound
        return int(max(krull_dim(M.ring), 0)) + 2

    @staticmethod
    def _int(text) -> int:
        try:
            return int(str(text).replace(" ", ""))
        except ValueError:
            raise ScriptError(f"expected an integer, got {text!r}") from None

    # statements

    def run(self, script) -> list[Outcome]:
        outs: list[Outcome] = []
        stmts = list(script.statements)
        i = 0
        while i < len(stmts):
            if isinstance(stmts[i], CheckStmt):
                j = i
                while j < len(stmts) and isinstance(stmts[j], CheckStmt):
                    j += 1
                outs.extend(self._fan_out(stmts[i:j]))
                i = j
                continue
            outs.append(self._guarded(stmts[i]))
            i += 1
        return outs

    def _fan_out(self, checks) -> list[Outcome]:
        if self.opts.threads > 1 and len(checks) > 1:
            with ThreadPoolExecutor(max_workers=self.opts.threads) as pool:
                return list(pool.map(self._guarded, checks))
        return [self._guarded(s) for s in checks]

    def _guarded(self, stmt) -> Outcome:
        out = Outcome(stmt.line, stmt.format())
        try:
            self.execute(stmt, out)
        except (QhomError, ValueError, ZeroDivisionError) as exc:
            out.error = f"line {stmt.line}: {stmt.format()}: {exc}"
        return out

    def execute(self, stmt, out: Outcome):
        if isinstance(stmt, RingStmt):
            self.env[stmt.name] = self.make_ring(stmt)
            R = self.env[stmt.name]
            out.text.append(f"{stmt.name} = {R}")
        elif isinstance(stmt, ModuleStmt):
            M = self.make_module(stmt.expr)
            M.name = stmt.name
            self.env[stmt.name] = M
            out.text.append(f"{stmt.name}: {M.ngens} generator{'' if M.ngens == 1 else 's'}, "
                            f"hilbert {M.hilbert()}")
        elif isinstance(stmt, ComplexStmt):
            C = self.make_complex(stmt.expr)
            self.env[stmt.name] = C
            out.text.append(f"{stmt.name}: ranks {C.ranks()}")
        elif isinstance(stmt, PrintStmt):
            values = {}
            for item in stmt.items:
                v = self.evaluate(item)
                values[item.format()] = v
                out.text.append(f"{item.format()} = {_show(v, item.op)}")
            out.record = {"print": values}
        elif isinstance(stmt, CheckStmt):
            out.record = self.check(stmt.target, out)

    def make_ring(self, stmt: RingStmt) -> QuotientRing:
        fld = Field.parse(stmt.field)
        weights = None if stmt.weights is None else [self._int(w) for w in stmt.weights]
        P = PolyRing(fld, stmt.variables, weights, stmt.order or "grevlex")
        return P.quotient([P(r) for r in stmt.relations])

    def make_module(self, expr) -> GradedModule:
        if isinstance(expr, Coker):
            R = self.ring_of(expr.ring)
            twists = None if expr.twists is None else [self._int(t) for t in expr.twists]
            return GradedModule.coker(R, [[R(p) for p in row] for row in expr.rows], twists)
        op, a = expr.op, expr.args
        if op == "residue":
            return GradedModule.residue_field(self.ring_of(a[0]))
        if op == "free":
            return GradedModule.free(self.ring_of(a[0]), [self._int(t) for t in a[1]])
        if op == "ideal":
            R = self.ring_of(a[0])
            return GradedModule.ideal(R, [R(p) for p in a[1]])
        if op == "cyclic":
            R = self.ring_of(a[0])
            return GradedModule.cyclic(R, [R(p) for p in a[1]])
        if op == "dual":
            return matlis_dual(self.module(a[0]))
        if op == "omega":
            return dualizing_module(self.ring_of(a[0])).module
        if op == "cmdual":
            return cm_dual(self.module(a[0]))
        if op == "base":
            return self.module(a[0]).base_change(self.ring_of(a[1]))
        if op == "sum":
            mods = [self.module(n) for n in a]
            return mods[0].direct_sum(*mods[1:])
        if op == "shift":
            return self.module(a[0]).shifted(self._int(a[1]))
        if op == "syzygy":
            M = self.module(a[0])
            j = self._int(a[1]) if len(a) > 1 else 1
            from ..quasires import syzygy_module

            return syzygy_module(M, j)
        if op == "minimal":
            return self.module(a[0]).minimal_presentation()
        raise ScriptError(f"unknown module constructor {op!r}")

    def make_complex(self, expr: Call) -> ChainComplex:
        op, a = expr.op, expr.args
        if op == "koszul":
            R = self.ring_of(a[0])
            return koszul_complex([R(p) for p in a[1] if R(p)], R)
        if op == "resolution":
            M = self.module(a[0])
            n = self._int(a[1]) if len(a) > 1 else self.length(M)
            return free_resolution(M, n)
        if op == "base":
            return self.lookup(a[0], ChainComplex).base_change(self.ring_of(a[1]))
        raise ScriptError(f"unknown complex constructor {op!r}")

    # print

    def evaluate(self, call: Call):
        op, a = call.op, call.args
        if op in ("homology", "ranks", "euler"):
            C = self.lookup(a[0], ChainComplex)
            if op == "ranks":
                return C.ranks()
            if op == "euler":
                return euler_check(C)
            return {i: str(C.homology(i).hilbert()) for i in C.indices
                    if not C.homology(i).is_zero()}
        M = self.module(a[0])
        if op == "depth":
            return depth(M)
        if op == "dim":
            return _dim(krull_dim(M))
        if op == "cm":
            return is_cm(M)
        if op == "gorenstein":
            return is_gorenstein(self.ring_of(a[0]))
        if op == "type":
            return cm_type(M)
        if op == "hilbert":
            return str(M.hilbert())
        if op == "values":
            lo = self._int(a[1]) if len(a) > 1 else 0
            return M.hilbert().values(lo, self.opts.degree_bound)
        if op == "betti":
            return betti_numbers(M, self._int(a[1]) if len(a) > 1 else self.length(M)).ranks
        if op == "bass":
            return bass_numbers(M, self._int(a[1]) if len(a) > 1 else self.length(M))
        if op == "pd":
            n = self._int(a[1]) if len(a) > 1 else self.length(M) + M.ring.nvars
            pd = projective_dimension(M, n)
            return "unknown" if pd is None else _dim(pd)
        if op == "presentation":
            return M.minimal_presentation().to_json()
        raise ScriptError(f"unknown query {op!r}")

    # check

    def check(self, target, out: Outcome) -> dict:
        seed = self.opts.seed
        if isinstance(target, str):
            obj = self.lookup(target)
            if isinstance(obj, QuotientRing):
                target = Call("koszul", [target])
            elif isinstance(obj, ChainComplex):
                obj.validate()
                ok = euler_check(obj)
                out.text.append(f"{target}: d^2 = 0, euler identity {'holds' if ok else 'FAILS'}")
                if not ok:
                    raise ScriptError("Euler characteristic identity fails")
                return {"complex": obj.to_json(), "euler": ok}
            else:
                a = self.check(Call("qpd", [target]), out)
                b = self.check(Call("qid", [target]), out)
                return {"qpd": a, "qid": b}
        op, a = target.op, target.args
        if op in ("qpd", "qid"):
            M = self.module(a[0])
            v = qpd_certified(M, seed) if op == "qpd" else qid_certified(M, seed)
            val = {"finite": v.value, "infinite": "inf", "zero-module": "-inf"}.get(v.status)
            if v.status == "unknown":
                val = f"unknown in [{_dim(v.interval[0])}, inf]"
            via = ", ".join(t.id for t in v.trail)
            out.text.append(f"{op}({a[0]}) = {val}  [{via}]")
            return v.to_json()
        if op == "iso":
            M, N = self.module(a[0]), self.module(a[1])
            shift = len(a) > 2 and a[2] == "shift"
            w = is_isomorphic(M, N, seed=seed, up_to_shift=shift)
            out.text.append(f"iso({a[0]}, {a[1]}) = {w.verdict} ({w.reason})")
            if w.verdict == "undetermined":
                raise ScriptError("isomorphism test undetermined")
            return w.to_json()
        if op == "koszul":
            cert = koszul_qpres_residue_field(self.ring_of(a[0]), seed)
            out.text.append(f"koszul({a[0]}): multiplicities {cert.multiplicities}, "
                            f"valid {cert.valid}")
            if not cert.valid:
                raise ScriptError("Koszul certificate failed")
            return cert.to_json()
        if op == "tensordown":
            cert = qpres_tensor_down(self.module(a[0]), seed=seed)
            out.text.append(f"tensordown({a[0]}): multiplicities {cert.multiplicities}, "
                            f"valid {cert.valid}")
            if not cert.valid:
                raise ScriptError("tensor-down certificate failed")
            return cert.to_json()
        if op == "powerlift":
            C = self.lookup(a[0], ChainComplex)
            n = self._int(a[2])
            res = power_lift(C, a[1], n, seed=seed)
            out.text.append(f"powerlift({a[0]}, {a[1]}, {n}): "
                            f"{'verified' if res.ok else 'FAILED'} for i < {n}")
            if not res.ok:
                raise ScriptError("power lifting check failed")
            return {"homotopies": res.homotopies.to_json(),
                    "witnesses": {str(i): w.to_json() for i, w in res.witnesses.items()},
                    "splitting": {str(i): ok for i, ok in res.splitting_ok.items()}}
        raise ScriptError(f"unknown check {op!r}")


def _show(v, op: str = "") -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if op == "homology":
        return ", ".join(f"H_{k} = {x}" for k, x in sorted(v.items())) or "0"
    return str(v)


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get("QHOM_THREADS", "1")))
    except ValueError:
        return 1
