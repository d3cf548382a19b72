# -*- coding: utf-8 -*-
import argparse

from src.commands._common import Command, add_document_arg, add_param_flags, overrides_from
from src.utils.formatting import emit_rows, format_value, value_payload


class ConstructCommand(Command):
    """由 TSFV 评价族构造 G-TSF 值（幂平均中心点 + 最大距离半径）。"""

    name = "construct"
    help = "由评价族构造 G-TSF 值"

    def configure(self, parser: argparse.ArgumentParser) -> None:
        add_document_arg(parser)
        add_param_flags(parser, exponents=True)

    def run(self, args: argparse.Namespace) -> str:
        result = self.app.aggregation_service.construct(args.document, overrides_from(args))
        if args.format == "json":
            rows = [{"element": x, **value_payload(result[x])} for x in result]
        else:
            rows = [{"element": x, "value": format_value(result[x], decimals=4)} for x in result]
        return emit_rows("G-TSF 值", rows, args.format)


def setup(app):
    app.add_command(ConstructCommand(app))
