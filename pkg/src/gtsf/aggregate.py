# -*- coding: utf-8 -*-
"""
G-TSF 加权平均 (G-TSFWAA) 与加权几何 (G-TSFWGA) 聚合算子。

两者互为 φ↔ψ 对偶；半径统一使用闭式的加权几何积 Π rᵢ^{wᵢ}。
"""

import logging
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from src.config import WEIGHT_SUM_TOLERANCE
from src.gtsf.core import GTSFValue, Params, TSFValue, validate_gtsfv
from src.gtsf.errors import InvalidWeights, LengthMismatch

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WeightVector:
    """严格为正、总和为 1 的权重向量。"""

    weights: tuple[float, ...]

    def __post_init__(self) -> None:
        weights = tuple(float(w) for w in self.weights)
        object.__setattr__(self, "weights", weights)
        if not weights:
            raise InvalidWeights("权重向量为空")
        for i, w in enumerate(weights):
            if not math.isfinite(w) or w <= 0.0:
                raise InvalidWeights(f"权重 w[{i}]={w!r} 必须严格为正")
        total = math.fsum(weights)
        if abs(total - 1.0) > WEIGHT_SUM_TOLERANCE:
            raise InvalidWeights(f"权重总和为 {total!r}，应为 1")

    @classmethod
    def uniform(cls, n: int) -> "WeightVector":
        if n < 1:
            raise InvalidWeights(f"等权向量的长度必须为正，收到 {n}")
        return cls(tuple([1.0 / n] * n))

    def __len__(self) -> int:
        return len(self.weights)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.weights, dtype=float)


def _prepare(
    values: Sequence[GTSFValue], w: WeightVector, p: Params
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """校验输入，返回 (n×3 分量矩阵, 半径向量, 权重向量)。"""
    if len(values) != len(w):
        raise LengthMismatch(f"{len(values)} 个值对应 {len(w)} 个权重")
    for i, v in enumerate(values):
        validate_gtsfv(v, p, path=f"values[{i}]")
    grades = np.array([v.center.grades() for v in values], dtype=float)
    radii = np.array([v.radius for v in values], dtype=float)
    return grades, radii, w.as_array()


def _geometric(x: np.ndarray, w: np.ndarray) -> float:
    """Π xᵢ^{wᵢ}"""
    return float(np.prod(np.power(x, w)))


def _dual_geometric(x: np.ndarray, w: np.ndarray, t: int) -> float:
    """(1 − Π(1 − xᵢᵗ)^{wᵢ})^{1/t}"""
    inner = 1.0 - np.prod(np.power(1.0 - x**t, w))
    return float(max(inner, 0.0) ** (1.0 / t))


def gtsfwaa(values: Sequence[GTSFValue], w: WeightVector, p: Params) -> GTSFValue:
    """⟨(1 − Π(1−φᵢᵗ)^{wᵢ})^{1/t}, Πχᵢ^{wᵢ}, Πψᵢ^{wᵢ}; Πrᵢ^{wᵢ}⟩"""
    grades, radii, weights = _prepare(values, w, p)
    center = TSFValue(
        _dual_geometric(grades[:, 0], weights, p.t),
        _geometric(grades[:, 1], weights),
        _geometric(grades[:, 2], weights),
    )
    return GTSFValue(center, _geometric(radii, weights))


def gtsfwga(values: Sequence[GTSFValue], w: WeightVector, p: Params) -> GTSFValue:
    """⟨Πφᵢ^{wᵢ}, Πχᵢ^{wᵢ}, (1 − Π(1−ψᵢᵗ)^{wᵢ})^{1/t}; Πrᵢ^{wᵢ}⟩"""
    grades, radii, weights = _prepare(values, w, p)
    center = TSFValue(
        _geometric(grades[:, 0], weights),
        _geometric(grades[:, 1], weights),
        _dual_geometric(grades[:, 2], weights, p.t),
    )
    return GTSFValue(center, _geometric(radii, weights))
