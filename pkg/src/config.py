# -*- coding: utf-8 -*-
"""
这个文件用于存放项目的配置信息和常量。
"""

# ===================================================================================
# 计算参数默认值
# ===================================================================================

# T-球面约束的默认指数 t（同时用于得分、距离与相似度）
DEFAULT_T = 3

# 得分函数的态度权重 σ，0.5 时半径项为 0
DEFAULT_SIGMA = 0.5

# 求解流水线中中心点的平均指数默认值（1 即专家评价的算术平均）
DEFAULT_AVG_T = 1

# 幂和约束的浮点容差
CONSTRAINT_TOLERANCE = 1e-9

# 分量相等、得分并列与权重求和的比较容差
EQUALITY_TOLERANCE = 1e-9
SCORE_TIE_TOLERANCE = 1e-9
WEIGHT_SUM_TOLERANCE = 1e-9
SIMILARITY_TIE_TOLERANCE = 1e-9

# 表格输出时的小数位数
DISPLAY_DECIMALS = 2


# ===================================================================================
# 文档格式
# ===================================================================================

SCHEMA_VERSION = "1.0"
SUPPORTED_SCHEMA_VERSIONS = ("1.0",)

# CSV 评价张量的表头
CSV_HEADER = ("expert", "alternative", "criterion", "phi", "chi", "psi")


# ===================================================================================
# 命令行退出码
# ===================================================================================

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_INPUT_ERROR = 2
EXIT_VALIDATION_ERROR = 3


# ===================================================================================
# 使用手册文本
# ===================================================================================

USER_MANUAL_TEXT = """
G-TSF 决策工具 使用手册
======================

本工具实现球状 T-球面模糊 (G-TSF) 演算：由多位专家的 T-球面模糊评价构造
带半径的 G-TSF 值，并用与理想方案的余弦相似度完成多准则群决策排序。

子命令
------
  solve       完整流水线：专家评价 -> G-TSF 决策矩阵 -> 相似度 -> 排序
  matrix      只输出 G-TSF 决策矩阵
  distance    两个 G-TSF 集合之间的距离（Hamming / Euclidean，逐元素或归一化）
  similarity  两个 G-TSF 集合逐元素的余弦相似度；--ideal 时按与理想方案的相似度排序
  aggregate   加权平均 (WAA) / 加权几何 (WGA) 聚合
  construct   由 TSFV 评价族构造 G-TSF 值
  score       得分函数与精确函数，以及集合内按比较规则的名次
  fixtures    列出或导出内置样例文档
  manual      显示本手册

常用参数
--------
  --t         约束、得分、距离与相似度使用的指数 t（单独给出时所有指数都取此值）
  --avg-t     中心点幂平均的指数（solve / matrix 默认 1）
  --radius-t  半径计算的指数（默认与 --avg-t 相同）
  --center-decimals  构造时把中心点舍入到给定位数，半径从舍入后的中心点量起
  --exact-centers    取消文档中固定的中心点舍入
  --sigma     得分函数的态度权重 σ ∈ [0,1]
  --format    输出格式：table 或 json
  --weights   逗号分隔的权重列表
  --verbose / --quiet  调整日志级别（日志写到标准错误）

退出码
------
  0 成功；2 输入错误（语法 / 字段 / 参数）；3 约束校验失败。

文档从文件路径读取，路径为 "-" 时读取标准输入；内置样例用 "fixture:名称" 引用，
例如 `solve fixture:example4`。
"""
