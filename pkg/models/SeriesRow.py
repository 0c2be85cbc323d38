from pydantic import BaseModel


class SeriesRow(BaseModel):
    n: int = 6
    gamma: int = 32
    mu_num: int = 1
    mu_den: int = 2
    mu_float: float = 0.5
