import logging
import sys

from src.wbptrees.infrastructure.config import Infos
from src.wbptrees.logs_management.run_logger import RunLogger, default_logs_filename


class ConsoleLogs(RunLogger):
    """
    Class to log messages of the command line runs.
    Records go to stderr, stdout is kept for the documents the commands print.
    """

    def __init__(self, logs_filename: str | None = None):
        super().__init__(logs_filename, "New wbptrees session")
        self.formatter = logging.Formatter('%(asctime)s - %(levelname)s - %(message)s')
        self.level = logging.INFO

    def set_level(self, level: str) -> None:
        super().set_level(level)
        self.level = logging.getLevelName(level.upper())

    def disable_file(self) -> None:
        self.close_logger()
        self.logs_filename = None

    def emit(self, record, print_formatted: bool = True):
        if record.levelno < self.level:
            return
        formatted_record = self.formatter.format(record)
        if print_formatted:
            print(formatted_record, file=sys.stderr)
        else:
            print(record.getMessage(), file=sys.stderr)
        for handler in self.logger.handlers:
            handler.handle(record)

    def log_error(self, message: str, print_formatted: bool = True) -> None:
        self.log(level="error", message=message, print_formatted=print_formatted)

    def log(self, message: str, level: str = "info", new_lines: int = 0, print_formatted: bool = True) -> None:
        """
        Prints to stderr, and logs to the logfile of the run, the message.
        :param message: The message to print
        :param level: The level of the message, e.g. "info", or "error"
        :param new_lines: The number of new lines to print before the message
        :param print_formatted: If True, the message will be printed with the date and the level, else it will be
        printed like a normal print
        :return: None
        """
        message = "\n" * new_lines + message
        record = self.logger.makeRecord(
            self.logger.name,
            logging.getLevelName(level.upper()),
            None,
            0,
            message,
            None,
            None
        )
        self.emit(record, print_formatted=print_formatted)


console_logs: ConsoleLogs = ConsoleLogs(default_logs_filename(Infos.run_logs_filename))
log = console_logs.log
log_error = console_logs.log_error
log_new_lines = console_logs.log_add_vertical_space
add_log_memory = console_logs.add_log_memory
log_from_memory = console_logs.log_from_memory
