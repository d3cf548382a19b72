# -*- coding: utf-8 -*-
import argparse

from src.commands._common import Command
from src.services.base import FIXTURE_PREFIX
from src.utils.formatting import emit_rows


class FixturesCommand(Command):
    name = "fixtures"
    help = "列出或导出内置样例文档"

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("name", nargs="?", default=None, help="要导出的样例名；省略时列出全部")
        parser.add_argument("--notes", action="store_true", help="只输出样例附带的说明")
        parser.add_argument(
            "--kind", choices=("problem", "sets", "families"), default=None, help="列出时按文档类型过滤"
        )
        parser.add_argument("--format", choices=("table", "json"), default="table")

    def run(self, args: argparse.Namespace) -> str:
        if args.name is None:
            rows = [
                {"name": name, "kind": kind, "notes": notes}
                for name, kind, notes in self.app.fixture_repo.describe(args.kind)
            ]
            return emit_rows("内置样例", rows, args.format)
        if args.notes:
            notes = self.app.decision_service.fixture_notes(FIXTURE_PREFIX + args.name)
            return "\n".join(f"- {note}" for note in notes)
        return self.app.fixture_repo.get_text(args.name).rstrip("\n")


def setup(app):
    app.add_command(FixturesCommand(app))
