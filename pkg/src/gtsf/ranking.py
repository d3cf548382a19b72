# -*- coding: utf-8 -*-
"""
得分函数、精确函数与 G-TSF 值的比较规则。
"""

import enum
from dataclasses import dataclass
from functools import cmp_to_key
from typing import Sequence

from src.config import CONSTRAINT_TOLERANCE, SCORE_TIE_TOLERANCE
from src.gtsf.core import GTSFValue, Params, power_sum


class Relation(str, enum.Enum):
    LESS = "less"
    GREATER = "greater"
    EQUIVALENT = "equivalent"


class DecidedBy(str, enum.Enum):
    SCORE = "score"
    ACCURACY = "accuracy"
    EXHAUSTED = "exhausted"


@dataclass(frozen=True, slots=True)
class Ordering:
    """比较结果，以及作出判定的那一级规则。"""

    relation: Relation
    decided_by: DecidedBy

    def as_int(self) -> int:
        if self.relation is Relation.GREATER:
            return 1
        if self.relation is Relation.LESS:
            return -1
        return 0


def score(a: GTSFValue, p: Params) -> float:
    """½(φᵗ − χᵗ − ψᵗ + r(2σ − 1))，对合法输入落在 [−1, 1] 内。"""
    t = p.t
    value = 0.5 * (a.phi**t - a.chi**t - a.psi**t + a.radius * (2 * p.sigma - 1))
    assert -1.0 - CONSTRAINT_TOLERANCE <= value <= 1.0 + CONSTRAINT_TOLERANCE, value
    return value


def accuracy(a: GTSFValue, p: Params) -> float:
    """φᵗ + χᵗ + ψᵗ，对合法输入落在 [0, 1] 内。"""
    value = power_sum(a.center, p.t)
    assert 0.0 <= value <= 1.0 + CONSTRAINT_TOLERANCE, value
    return value


def _relation(x: float, y: float) -> Relation:
    if abs(x - y) <= SCORE_TIE_TOLERANCE:
        return Relation.EQUIVALENT
    return Relation.GREATER if x > y else Relation.LESS


def compare(a: GTSFValue, b: GTSFValue, p: Params) -> Ordering:
    """先比较得分；得分在容差内相等时比较精确度；两者都相等则视为等价。"""
    by_score = _relation(score(a, p), score(b, p))
    if by_score is not Relation.EQUIVALENT:
        return Ordering(by_score, DecidedBy.SCORE)
    by_accuracy = _relation(accuracy(a, p), accuracy(b, p))
    if by_accuracy is not Relation.EQUIVALENT:
        return Ordering(by_accuracy, DecidedBy.ACCURACY)
    return Ordering(Relation.EQUIVALENT, DecidedBy.EXHAUSTED)


def rank_values(values: Sequence[GTSFValue], p: Params) -> list[int]:
    """
    按 `compare` 从优到劣排序，返回输入下标。

    排序是稳定的，等价的值保持输入顺序。
    """
    key = cmp_to_key(lambda i, j: -compare(values[i], values[j], p).as_int())
    return sorted(range(len(values)), key=key)
