import sys

from path_production_fix import add_project_to_path

add_project_to_path()

from src.wbptrees.application.cli import cli_main
from src.wbptrees.logs_management.console_logger import console_logs


class Program:
    """
    Main class of the program. Runs one command line and closes the run log.
    """

    def __init__(self, argv: list[str]):
        self.argv = argv

    def start(self) -> int:
        try:
            return cli_main(self.argv)
        except KeyboardInterrupt:
            return 130
        finally:
            self.stop()

    @staticmethod
    def stop():
        console_logs.close_logger()


if __name__ == '__main__':
    sys.exit(Program(sys.argv[1:]).start())
