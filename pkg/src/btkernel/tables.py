"""Kernel tables per twist and the oracle-vs-closed-form sweep."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .closedform import decompose_2D, dispatch, rule_case
from .errors import ConsistencyError, DomainError
from .kernel import (MultiType, format_type, is_strongly_invariant, kernel_size, orbit_of,
                     quasi_split_problem, stabilizer_of)
from .permgroups import TwistedForm

TABLE_TWISTS = ("2A", "2D", "3D4", "6D4", "2E6")
TSV_COLUMNS = ("rank", "type", "case", "fixed_count", "quotient_count")


def _table_forms(twist: str, max_rank: int):
    if twist == "2A":
        return [TwistedForm("A", n, "2A") for n in range(1, max_rank + 1)]
    if twist == "2D":
        return [TwistedForm("D", n, "2D") for n in range(4, max_rank + 1)]
    if twist in ("3D4", "6D4"):
        return [TwistedForm("D", 4, twist)] if max_rank >= 4 else []
    if twist == "2E6":
        return [TwistedForm("E6", 6, "2E6")] if max_rank >= 6 else []
    raise DomainError("no table for twist %r (supported: %s)" % (twist, ", ".join(TABLE_TWISTS)))


def _checked_counts(form: TwistedForm, t: MultiType):
    oracle = kernel_size(quasi_split_problem(form, t)).counts()
    closed = dispatch(form, t)
    if oracle != closed:
        raise ConsistencyError("%s, type %s: oracle %s vs closed form %s"
                               % (form.label(), t, oracle, closed))
    return oracle


def table_rows(twist: str, max_rank: int) -> list:
    """One row per xi_nr-class of nonempty galois-invariant types."""
    forms = _table_forms(twist, max_rank)
    if not forms:
        raise DomainError("max rank %d is below every rank of twist %s" % (max_rank, twist))
    rows = []
    for form in forms:
        d = form.diagram()
        problem = quasi_split_problem(form, MultiType())
        candidates = sorted(
            t for t in (MultiType.single(v for v in d.vertices if mask >> v & 1)
                        for mask in range(1, 1 << d.size))
            if is_strongly_invariant(t, problem.gamma))
        seen = set()
        for t in candidates:
            if t in seen:
                continue
            seen.update(orbit_of(t, problem.xi_nr))
            fixed, quotient = _checked_counts(form, t)
            row = {"rank": form.rank, "type": list(t.support), "case": rule_case(form, t),
                   "fixed_count": fixed, "quotient_count": quotient}
            if twist == "2A":
                row["m"] = int(row["case"][2:])
            elif twist == "2D":
                dec = decompose_2D(form.rank, t.support)
                row["r_part"] = list(dec.r_part)
                row["s_part"] = list(dec.s_part)
            rows.append(row)
    return rows


def emit_table(twist: str, max_rank: int, fmt: str = "tsv") -> str:
    rows = table_rows(twist, max_rank)
    if fmt == "tsv":
        lines = ["\t".join(TSV_COLUMNS)]
        for r in rows:
            lines.append("\t".join([str(r["rank"]), format_type(r["type"]), r["case"],
                                    str(r["fixed_count"]), str(r["quotient_count"])]))
        return "\n".join(lines) + "\n"
    if fmt == "json":
        doc = {"twist": twist, "max_rank": max_rank, "rows": rows}
        return json.dumps(doc, indent=2) + "\n"
    raise DomainError("unknown table format %r" % (fmt,))


@dataclass
class SweepSummary:
    subsets_examined: int = 0
    cases_checked: int = 0
    per_form: dict = field(default_factory=dict)
    mismatches: list = field(default_factory=list)
    nontrivial: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "subsets_examined": self.subsets_examined,
            "cases_checked": self.cases_checked,
            "per_form": self.per_form,
            "mismatches": self.mismatches,
            "nontrivial": self.nontrivial,
        }


def sweep_forms(max_a: int, max_d: int) -> list:
    forms = []
    for n in range(1, max_a + 1):
        forms += [TwistedForm("A", n, "split"), TwistedForm("A", n, "2A")]
    for n in range(4, max_d + 1):
        forms += [TwistedForm("D", n, "split"), TwistedForm("D", n, "2D")]
    forms += [TwistedForm("D", 4, "3D4"), TwistedForm("D", 4, "6D4"),
              TwistedForm("E6", 6, "split"), TwistedForm("E6", 6, "2E6")]
    forms += [TwistedForm(f, r) for f, r in (("E7", 7), ("E8", 8), ("F4", 4), ("G2", 2))]
    forms += [TwistedForm("B", n) for n in range(2, max_d + 1)]
    forms += [TwistedForm("C", n) for n in range(3, max_d + 1)]
    return forms


def sweep_form(form: TwistedForm, summary: SweepSummary) -> None:
    problem = quasi_split_problem(form, MultiType())
    d, gamma, xi_nr = problem.diagram, problem.gamma, problem.xi_nr
    examined = checked = 0
    for mask in range(1 << d.size):
        examined += 1
        t = MultiType.single(v for v in d.vertices if mask >> v & 1)
        if not is_strongly_invariant(t, gamma):
            continue
        checked += 1
        report = kernel_size(quasi_split_problem(form, t))
        closed = dispatch(form, t)
        where = "%s %s" % (form.label(), format_type(t.support))
        if report.counts() != closed:
            summary.mismatches.append(
                "%s: oracle %s, closed form %s" % (where, report.counts(), closed))
        if report.orbit_size * len(stabilizer_of(t, xi_nr)) != len(xi_nr):
            summary.mismatches.append("%s: orbit-stabilizer fails" % where)
        if report.quotient_count > 1:
            summary.nontrivial.append(where)
    summary.subsets_examined += examined
    summary.cases_checked += checked
    summary.per_form[form.label()] = {"subsets": examined, "checked": checked}


def verify_sweep(max_a: int, max_d: int) -> SweepSummary:
    """Compare oracle and closed form on every invariant single type."""
    if max_a < 1 or max_d < 4:
        raise DomainError("sweep bounds need max_a >= 1 and max_d >= 4")
    summary = SweepSummary()
    for form in sweep_forms(max_a, max_d):
        sweep_form(form, summary)
    return summary
