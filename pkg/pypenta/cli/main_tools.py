# -*- coding: utf-8 -*-
import json
import sys
from enum import Enum, unique
from typing import Callable, List, Optional, Tuple, Type

from monty.json import MontyDecoder, MontyEncoder, MSONable

from pypenta.core.domains import Tolerances
from pypenta.core.error_classes import InvalidInputError, PypentaError
from pypenta.util.logger import get_logger

logger = get_logger(__name__)


@unique
class Status(Enum):
    ok = "ok"
    invalid_input = "invalid-input"
    check_failed = "check-failed"

    def __repr__(self):
        return self.value

    def __str__(self):
        return self.value

    @classmethod
    def from_string(cls, s: str):
        for m in cls:
            if m.value == s or m.name == s:
                return m
        raise AttributeError(f"Status {s} is not proper.")

    @property
    def exit_code(self) -> int:
        return {Status.ok: 0,
                Status.check_failed: 1,
                Status.invalid_input: 2}[self]


class CommandResult(MSONable):
    """Status, command-specific payload and human-readable diagnostics. """

    def __init__(self,
                 status: Status,
                 payload=None,
                 diagnostics: Optional[List[str]] = None):
        self.status = status
        self.payload = payload
        self.diagnostics = list(diagnostics or [])

    @property
    def exit_code(self) -> int:
        return self.status.exit_code

    def as_dict(self) -> dict:
        return {"status": str(self.status),
                "payload": self.payload,
                "diagnostics": self.diagnostics}

    @classmethod
    def from_dict(cls, d: dict):
        return cls(Status.from_string(d["status"]), d.get("payload"),
                   d.get("diagnostics"))

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True,
                          cls=MontyEncoder)


def read_json_input(in_file: Optional[str] = None):
    """Parse JSON from the file or, when in_file is None, from stdin.

    Objects carrying @module and @class are decoded to their classes. A
    CommandResult document is unwrapped to its payload so that commands can
    be piped.

    Raises:
        InvalidInputError: when the text is not JSON or the file is missing.
    """
    try:
        if in_file:
            with open(in_file) as fr:
                text = fr.read()
        else:
            text = sys.stdin.read()
        obj = json.loads(text, cls=MontyDecoder)
    except (OSError, ValueError) as e:
        raise InvalidInputError(f"Reading JSON failed: {e}")

    if isinstance(obj, dict) and {"status", "payload"} <= set(obj):
        obj = obj["payload"]
    return obj


def to_object(obj, cls: Type[MSONable]):
    """obj if already an instance of cls, otherwise cls.from_dict(obj).

    Raises:
        InvalidInputError: when obj does not represent a cls.
    """
    if isinstance(obj, cls):
        return obj
    try:
        return cls.from_dict(obj)
    except InvalidInputError:
        raise
    except (KeyError, TypeError, ValueError, AttributeError) as e:
        raise InvalidInputError(
            f"Input does not represent {cls.__name__}: {e!r}")


def write_result(result: CommandResult, out_file: Optional[str] = None
                 ) -> None:
    text = result.to_json() + "\n"
    if out_file:
        with open(out_file, "w") as fw:
            fw.write(text)
    else:
        sys.stdout.write(text)


def parse_alpha_grid(s) -> Tuple[int, int]:
    """"32x64" (or a two-element sequence from yaml) to (32, 64). """
    try:
        if isinstance(s, str):
            radial, angular = s.lower().replace("×", "x").split("x")
        else:
            radial, angular = s
        return int(radial), int(angular)
    except (TypeError, ValueError):
        raise InvalidInputError(f"Alpha grid {s} is not of the form RxA.")


def tolerances_from_args(args) -> Tolerances:
    try:
        return Tolerances(boundary_tol=args.tol_boundary,
                          member_tol=args.tol_member,
                          alpha_grid=parse_alpha_grid(args.alpha_grid))
    except ValueError as e:
        raise InvalidInputError(str(e))


def execute(func: Callable[..., CommandResult], args) -> CommandResult:
    """Run a subcommand, mapping errors to statuses.

    InvalidInputError and ValueError give invalid-input and any other
    PypentaError gives check-failed, with the message copied to the
    diagnostics.
    """
    try:
        return func(args)
    except (InvalidInputError, ValueError) as e:
        logger.error(str(e))
        return CommandResult(Status.invalid_input, diagnostics=[str(e)])
    except PypentaError as e:
        logger.error(str(e))
        return CommandResult(Status.check_failed, diagnostics=[str(e)])
