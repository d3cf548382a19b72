# -*- coding: utf-8 -*-
import argparse

from src.commands._common import Command, add_document_arg, add_param_flags, overrides_from
from src.services.measure_service import MEASURES
from src.utils.formatting import emit_rows


class DistanceCommand(Command):
    """两个 G-TSF 集合之间的 Hamming / Euclidean 距离。"""

    name = "distance"
    help = "计算两个 G-TSF 集合之间的距离"

    def configure(self, parser: argparse.ArgumentParser) -> None:
        add_document_arg(parser)
        parser.add_argument("--left", default=None, help="左侧集合名（默认第一个）")
        parser.add_argument("--right", default=None, help="右侧集合名（默认第二个）")
        parser.add_argument(
            "--measure",
            choices=MEASURES + ("all",),
            default="all",
            help="输出哪种距离",
        )
        parser.add_argument(
            "--elementwise", action="store_true", help="同时输出逐元素距离"
        )
        add_param_flags(parser)

    def run(self, args: argparse.Namespace) -> str:
        rows, totals = self.app.measure_service.distance(
            args.document, args.left, args.right, overrides_from(args)
        )
        measures = MEASURES if args.measure == "all" else (args.measure,)
        if args.elementwise:
            element_rows = [{"element": r["element"], **{m: r[m] for m in measures}} for r in rows]
            normalized = {f"normalized_{m}": totals[m] for m in measures}
            return emit_rows("逐元素距离", element_rows, args.format, extra=normalized)
        summary = [{"measure": m, "distance": totals[m]} for m in measures]
        return emit_rows("归一化距离", summary, args.format)


def setup(app):
    app.add_command(DistanceCommand(app))
