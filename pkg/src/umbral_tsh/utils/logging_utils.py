"""Logging for umbral-tsh: stderr only, with long polynomial witnesses cut short."""

import logging
import re
import sys

WITNESS_FIELDS = ("lhs", "rhs", "witness")
DEFAULT_FORMAT = "%(levelname)s %(name)s: %(message)s"


class TruncatingLogFormatter(logging.Formatter):
    """Cuts ``lhs=``, ``rhs=`` and ``witness=`` values to ``max_field_length``.

    A failed identity at degree 10 logs both sides in full, which runs to
    pages of terms. A value extends up to the next witness field or the end
    of the message.
    """

    _FIELD = re.compile(
        r"\b(?P<field>{names})=(?P<value>.*?)(?=\s(?:{names})=|$)".format(names="|".join(WITNESS_FIELDS))
    )

    def __init__(self, max_field_length: int = 200, fmt: str = DEFAULT_FORMAT):
        super().__init__(fmt)
        self.max_field_length = max_field_length

    def format(self, record: logging.LogRecord) -> str:
        message = record.getMessage()
        shortened = self._FIELD.sub(self._shorten, message)
        if shortened != message:
            record.msg, record.args = shortened, ()
        return super().format(record)

    def _shorten(self, match: re.Match) -> str:
        value = match.group("value")
        if len(value) <= self.max_field_length:
            return match.group(0)
        return f"{match.group('field')}={value[: self.max_field_length]}...[truncated]"


def setup_truncating_logger(
    logger_name: str, max_field_length: int = 200, level: int = logging.INFO
) -> logging.Logger:
    """Route ``logger_name`` to stderr through a :class:`TruncatingLogFormatter`.

    Calling it again replaces the previous handlers, so the CLI can be run
    several times in one process without duplicated lines.
    """
    logger = logging.getLogger(logger_name)
    logger.setLevel(level)
    logger.handlers.clear()
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(TruncatingLogFormatter(max_field_length=max_field_length))
    logger.addHandler(handler)
    return logger
