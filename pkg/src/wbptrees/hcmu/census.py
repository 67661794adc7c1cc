# -----------------------------------------------------------
# census.py
# Description: per cone angle census of the (p, q) pairs and of the trees counting the saddle components.
# -----------------------------------------------------------
import concurrent.futures
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from src.wbptrees.closedform.closed_count import count_closed
from src.wbptrees.exceptions.CensusExceptions import InvalidAngleError
from src.wbptrees.infrastructure.config import Infos
from src.wbptrees.logs_management.console_logger import log

FOOTBALL_NOTE = ("football component (singularity at a curvature extremum): 1, "
                 "reported apart and not included in saddle_total")


def admissible(p: int, q: int) -> tuple[bool, str]:
    """
    :return: whether trees with passport (q^p | p^q) count saddle components, and why
    """
    if q < 1:
        return False, "q < 1"
    if p <= q:
        return False, "p <= q"
    if q == 1:
        return True, "q = 1"
    if p % q == 0:
        return False, "q divides p"
    return True, "q does not divide p"


@dataclass(frozen=True)
class CensusRow:
    p: int
    q: int
    admissible: bool
    reason: str
    count: int | None = None

    def to_dict(self) -> dict:
        row = {"p": self.p, "q": self.q, "admissible": self.admissible, "reason": self.reason}
        if self.count is not None:
            row["count"] = str(self.count)
        return row


@dataclass(frozen=True)
class PqCensus:
    alpha: int
    rows: list[CensusRow] = field(default_factory=list)
    football_note: str = FOOTBALL_NOTE

    @property
    def saddle_total(self) -> int:
        return sum(row.count for row in self.rows if row.count is not None)

    def to_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "rows": [row.to_dict() for row in self.rows],
            "saddle_total": str(self.saddle_total),
            "football_note": self.football_note,
        }

    def to_json(self, indent: int | None = 4) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def to_text(self) -> str:
        lines = [f"alpha = {self.alpha}", f"{'p':>6} {'q':>6}  {'admissible':<10}  {'count':>12}  reason"]
        for row in self.rows:
            count = str(row.count) if row.count is not None else "-"
            lines.append(f"{row.p:>6} {row.q:>6}  {'yes' if row.admissible else 'no':<10}  {count:>12}  {row.reason}")
        lines.append(f"saddle_total = {self.saddle_total}")
        lines.append(self.football_note)
        return "\n".join(lines)


def pq_pairs(alpha: int) -> list[tuple[int, int]]:
    """
    Every (p, q) with p + q = alpha + 1 and p > q >= 1, by decreasing p.
    """
    return [(alpha + 1 - q, q) for q in range(1, alpha + 1) if alpha + 1 - q > q]


def _row(p: int, q: int) -> CensusRow:
    is_admissible, reason = admissible(p, q)
    return CensusRow(p, q, is_admissible, reason, count_closed(p, q) if is_admissible else None)


def census(alpha: int, max_workers: int = Infos.default_max_workers) -> PqCensus:
    """
    :raise InvalidAngleError: if alpha < 3
    """
    if isinstance(alpha, bool) or not isinstance(alpha, int) or alpha < 3:
        raise InvalidAngleError(f"the cone angle must be an integer alpha >= 3, got {alpha!r}")
    pairs = pq_pairs(alpha)
    rows: dict[tuple[int, int], CensusRow] = {}
    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        future_to_pair = {executor.submit(_row, p, q): (p, q) for p, q in pairs}
        for future in concurrent.futures.as_completed(future_to_pair):
            rows[future_to_pair[future]] = future.result()
    log(f"census of alpha={alpha}: {len(pairs)} pairs", level="debug")
    return PqCensus(alpha, [rows[pair] for pair in pairs])
