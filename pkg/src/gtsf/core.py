# -*- coding: utf-8 -*-
"""
核心领域类型、约束校验，以及所有模块共用的参数上下文。

所有类型都是不可变的值对象，所有操作都是纯函数。
"""

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Optional

from pydantic import BaseModel, ConfigDict, Field

from src.config import CONSTRAINT_TOLERANCE, DEFAULT_SIGMA, DEFAULT_T
from src.gtsf.errors import (
    ComponentOutOfRange,
    ConstraintViolated,
    NonZeroIndeterminacy,
    RadiusOutOfRange,
    ValidationFailure,
)

# ==================================
# 参数
# ==================================


class Params(BaseModel):
    """
    一次计算所用的参数。

    t 控制约束、得分、距离和相似度；avg_t / radius_t 分别覆盖中心点幂平均
    与半径计算的指数，未设置时依次回退到 avg_t、t。

    center_decimals 设置后，构造 G-TSF 值时中心点先四舍五入到该位数，
    半径再从舍入后的中心点量起。zero_chi 要求每个值的 χ 为 0。
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    t: int = Field(DEFAULT_T, ge=1)
    sigma: float = Field(DEFAULT_SIGMA, ge=0.0, le=1.0)
    avg_t: Optional[int] = Field(None, ge=1)
    radius_t: Optional[int] = Field(None, ge=1)
    center_decimals: Optional[int] = Field(None, ge=0)
    zero_chi: bool = False

    @property
    def averaging_exponent(self) -> int:
        return self.avg_t if self.avg_t is not None else self.t

    @property
    def radius_exponent(self) -> int:
        if self.radius_t is not None:
            return self.radius_t
        return self.averaging_exponent

    # --- 退化为已有圆形模糊族的参数特例 ---

    @classmethod
    def circular_spherical(cls, sigma: float = DEFAULT_SIGMA) -> "Params":
        """C-SFS：t = 2。"""
        return cls(t=2, sigma=sigma)

    @classmethod
    def circular_pythagorean(cls, sigma: float = DEFAULT_SIGMA) -> "Params":
        """C-PyFS：t = 2，且值的 χ 必须为 0。"""
        return cls(t=2, sigma=sigma, zero_chi=True)

    @classmethod
    def circular_intuitionistic(cls, sigma: float = DEFAULT_SIGMA) -> "Params":
        """C-IFS：t = 1，且值的 χ 必须为 0。"""
        return cls(t=1, sigma=sigma, zero_chi=True)


# ==================================
# 值类型
# ==================================


@dataclass(frozen=True, slots=True)
class TSFValue:
    """T-球面模糊值 ⟨φ, χ, ψ⟩：隶属度、不确定度、非隶属度。"""

    phi: float
    chi: float
    psi: float

    def grades(self) -> tuple[float, float, float]:
        return (self.phi, self.chi, self.psi)

    def swapped(self) -> "TSFValue":
        """交换 φ 与 ψ（补运算）。"""
        return TSFValue(self.psi, self.chi, self.phi)

    def __str__(self) -> str:
        return f"⟨{self.phi:g}, {self.chi:g}, {self.psi:g}⟩"


@dataclass(frozen=True, slots=True)
class GTSFValue:
    """
    G-TSF 值 ⟨φ, χ, ψ; r⟩：TSFV 中心加球半径。

    `normal` 为 False 表示该值由闭式运算得到但已离开约束区域
    （例如权重为 0 的数乘），下游聚合不会接受它。
    """

    center: TSFValue
    radius: float
    normal: bool = field(default=True, compare=False)

    @classmethod
    def of(cls, phi: float, chi: float, psi: float, radius: float) -> "GTSFValue":
        return cls(TSFValue(phi, chi, psi), radius)

    @property
    def phi(self) -> float:
        return self.center.phi

    @property
    def chi(self) -> float:
        return self.center.chi

    @property
    def psi(self) -> float:
        return self.center.psi

    def swapped(self) -> "GTSFValue":
        return GTSFValue(self.center.swapped(), self.radius, self.normal)

    def __str__(self) -> str:
        return f"⟨{self.phi:g}, {self.chi:g}, {self.psi:g}; {self.radius:g}⟩"


@dataclass(frozen=True)
class GTSFSet:
    """论域标签到 G-TSF 值的有序映射，每个元素可以有各自的半径。"""

    elements: Mapping[str, GTSFValue]

    def __post_init__(self) -> None:
        object.__setattr__(self, "elements", MappingProxyType(dict(self.elements)))

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[str, GTSFValue]]) -> "GTSFSet":
        """从 (标签, 值) 序列构造，标签重复时报错。"""
        data: dict[str, GTSFValue] = {}
        for label, value in pairs:
            if label in data:
                raise ValueError(f"论域标签重复: {label!r}")
            data[label] = value
        return cls(data)

    @classmethod
    def uniform(cls, centers: Mapping[str, TSFValue], radius: float) -> "GTSFSet":
        """所有元素共用同一半径。"""
        return cls({label: GTSFValue(c, radius) for label, c in centers.items()})

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self.elements)

    def values(self) -> list[GTSFValue]:
        return list(self.elements.values())

    def map(self, fn) -> "GTSFSet":
        return GTSFSet({label: fn(v) for label, v in self.elements.items()})

    def __getitem__(self, label: str) -> GTSFValue:
        return self.elements[label]

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GTSFSet):
            return NotImplemented
        return list(self.elements.items()) == list(other.elements.items())


# ==================================
# 校验
# ==================================


def power_sum(v: TSFValue, t: int) -> float:
    """φ^t + χ^t + ψ^t。"""
    return v.phi**t + v.chi**t + v.psi**t


def validate_tsfv(v: TSFValue, p: Params, *, path: Optional[str] = None) -> None:
    """
    校验一个 TSFV：各分量在 [0, 1] 内，且幂和不超过 1 + ε。

    通过时返回 None，失败时抛出 ComponentOutOfRange、ConstraintViolated，
    或在 `p.zero_chi` 下抛出 NonZeroIndeterminacy。
    """
    total = power_sum(v, p.t) if all(x >= 0 for x in v.grades()) else float("nan")
    for name, value in zip(("phi", "chi", "psi"), v.grades()):
        if not 0.0 <= value <= 1.0:
            raise ComponentOutOfRange(name, value, total, path=path)
    if total > 1.0 + CONSTRAINT_TOLERANCE:
        raise ConstraintViolated(v, total, p.t, path=path)
    if p.zero_chi and v.chi != 0.0:
        raise NonZeroIndeterminacy(v.chi, path=path)


def validate_gtsfv(v: GTSFValue, p: Params, *, path: Optional[str] = None) -> None:
    """校验中心点并检查半径 r ∈ [0, 1]。"""
    validate_tsfv(v.center, p, path=path)
    if not 0.0 <= v.radius <= 1.0:
        raise RadiusOutOfRange(v.radius, path=path)


def is_valid_tsfv(v: TSFValue, p: Params) -> bool:
    try:
        validate_tsfv(v, p)
    except ValidationFailure:
        return False
    return True


def is_valid_gtsfv(v: GTSFValue, p: Params) -> bool:
    try:
        validate_gtsfv(v, p)
    except ValidationFailure:
        return False
    return True
