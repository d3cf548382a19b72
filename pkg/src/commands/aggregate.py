# -*- coding: utf-8 -*-
import argparse

from src.commands._common import (
    Command,
    add_document_arg,
    add_param_flags,
    overrides_from,
    weights_arg,
)
from src.utils.formatting import emit_rows, format_value, value_payload


class AggregateCommand(Command):
    """对一个集合中的全部值做加权平均 (WAA) / 加权几何 (WGA) 聚合。"""

    name = "aggregate"
    help = "加权平均 / 加权几何聚合"

    def configure(self, parser: argparse.ArgumentParser) -> None:
        add_document_arg(parser)
        parser.add_argument("--set", dest="set_name", default=None, help="集合名（默认第一个）")
        parser.add_argument(
            "--operator", choices=("waa", "wga", "both"), default="both", help="聚合算子"
        )
        parser.add_argument(
            "--weights", type=weights_arg, default=None, help="逗号分隔的权重（默认等权）"
        )
        add_param_flags(parser)

    def run(self, args: argparse.Namespace) -> str:
        operators = ("waa", "wga") if args.operator == "both" else (args.operator,)
        results = self.app.aggregation_service.aggregate(
            args.document, args.set_name, args.weights, operators, overrides_from(args)
        )
        if args.format == "json":
            rows = [{"operator": op, **value_payload(v)} for op, v in results.items()]
        else:
            rows = [{"operator": op, "value": format_value(v, decimals=4)} for op, v in results.items()]
        return emit_rows("聚合结果", rows, args.format)


def setup(app):
    app.add_command(AggregateCommand(app))
