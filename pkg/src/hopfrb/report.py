"""Structured pass/fail verdicts for identity checkers.

Every checker in this package returns a VerificationReport instead of a bare
bool, so a failing identity always carries a witness (which basis elements,
which identity, both sides as exact scalar strings) and a passing run carries
counters for how much work was done.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class VerificationReport:
    status: str  # "pass" or "fail"
    identity: str = ""
    witness: dict | None = None
    stats: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        assert self.status in ("pass", "fail")
        # a failure with no witness is useless downstream; forbid it early
        assert self.status == "pass" or self.witness is not None

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def passing(cls, identity: str = "", **stats) -> "VerificationReport":
        return cls(status="pass", identity=identity, stats=dict(stats))

    @classmethod
    def failing(cls, identity: str, witness: dict, **stats) -> "VerificationReport":
        return cls(status="fail", identity=identity, witness=dict(witness), stats=dict(stats))

    def to_json(self) -> dict:
        out = {"status": self.status}
        if self.identity:
            out["identity"] = self.identity
        if self.witness is not None:
            out["witness"] = self.witness
        if self.stats:
            out["stats"] = self.stats
        if self.details:
            out["details"] = self.details
        return out


def merge_reports(parts: dict[str, VerificationReport], checked: int = 0) -> VerificationReport:
    """Combine named sub-reports: fail with the first failing part, else pass.

    The per-part verdicts are kept under ``details`` either way.
    """
    details = {name: r.to_json() for name, r in parts.items()}
    for name, r in parts.items():
        if not r.ok:
            ident = name
            if r.identity and r.identity != name:
                ident = f"{name}.{r.identity}"
            out = VerificationReport.failing(
                identity=ident,
                witness=r.witness or {},
                identities_checked=checked,
            )
            out.details = details
            return out
    out = VerificationReport.passing(identities_checked=checked)
    out.details = details
    return out
