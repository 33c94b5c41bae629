"""Pydantic models for verification results."""
from typing import Dict, List, Optional

from pydantic import BaseModel, Field


class IdentityResult(BaseModel):
    tag: str
    passed: bool
    detail: str = ""
    lhs: Optional[str] = None
    rhs: Optional[str] = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{self.tag}: {status}"
        if self.detail:
            text += f" ({self.detail})"
        return text


class VerificationReport(BaseModel):
    subject: str
    results: List[IdentityResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def add(self, result: IdentityResult) -> "VerificationReport":
        self.results.append(result)
        return self

    def record(self, tag: str, passed: bool, detail: str = "",
               lhs: Optional[str] = None, rhs: Optional[str] = None) -> IdentityResult:
        result = IdentityResult(tag=tag, passed=bool(passed), detail=detail, lhs=lhs, rhs=rhs)
        self.results.append(result)
        return result

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        self.results.extend(other.results)
        return self

    def failures(self) -> List[IdentityResult]:
        return [r for r in self.results if not r.passed]

    def get(self, tag: str) -> IdentityResult:
        for r in self.results:
            if r.tag == tag:
                return r
        raise KeyError(tag)

    def tags(self) -> List[str]:
        return [r.tag for r in self.results]


class SuiteReport(BaseModel):
    suite: str
    seconds: Optional[float] = None
    skipped: Optional[str] = None
    identities: Dict[str, bool]
    failures: List[IdentityResult] = Field(default_factory=list)


class RunReport(BaseModel):
    algebra: str
    field: str
    seed: int
    samples: int
    suites: List[SuiteReport] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(not s.failures for s in self.suites)
