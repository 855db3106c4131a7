"""Verification report carried back from the consistency-check sweeps."""

from dataclasses import dataclass, field

MAX_RECORDED_FAILURES = 20


@dataclass
class Report:
    name: str
    ok: bool = True
    failures: list[str] = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    def fail(self, message: str) -> None:
        self.ok = False
        if len(self.failures) < MAX_RECORDED_FAILURES:
            self.failures.append(message)

    def check(self, condition: bool, message: str) -> None:
        if not condition:
            self.fail(message)

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = "; ".join(f"{k}={v}" for k, v in self.stats.items())
        line = f"{self.name}: {status}"
        if extra:
            line += f" ({extra})"
        for failure in self.failures:
            line += f"\n  - {failure}"
        return line
