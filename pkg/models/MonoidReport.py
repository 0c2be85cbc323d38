from pydantic import BaseModel


class MonoidElement(BaseModel):
    images: list[int]
    witness: str


class MonoidReport(BaseModel):
    order: int
    state_count: int
    has_zero: bool
    zero_element: list[int] | None = None
    zero_witness: str | None = None
    elements: list[MonoidElement] | None = None
