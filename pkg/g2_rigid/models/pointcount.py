"""Point-count report."""

from typing import Literal, Optional

from pydantic import BaseModel, computed_field


class CharacterSumReport(BaseModel):
    """Counts on one fiber Hyp_t over F_q."""

    q: int
    t: int
    method: Literal["char-sum", "direct", "both"]
    domain_size: int  # admissible (x1..x6)
    s_value: int  # sum of the quadratic character of f over the domain
    hyp_count: int  # points (Y, x) with Y != 0
    direct_count: Optional[int] = None  # from the direct method, when run
    visited: int  # tuples enumerated by the kernel
    predicted_domain_size: int  # transfer-matrix count
    wall_time: float
    threads: int

    @computed_field
    @property
    def agrees(self) -> bool:
        direct_ok = self.direct_count is None or self.direct_count == self.domain_size + self.s_value
        return direct_ok and self.hyp_count == self.domain_size + self.s_value
