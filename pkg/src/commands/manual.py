import argparse

from src.commands._common import Command
from src.config import USER_MANUAL_TEXT


class ManualCommand(Command):
    """
    显示使用手册
    """

    name = "manual"
    help = "显示使用手册"

    def run(self, args: argparse.Namespace) -> str:
        # 内容直接从配置中导入
        return USER_MANUAL_TEXT.strip("\n")


def setup(app):
    app.add_command(ManualCommand(app))
