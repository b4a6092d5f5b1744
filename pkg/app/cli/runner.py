import json
import sys
from pathlib import Path
from typing import Optional, Sequence, TextIO

from pydantic import BaseModel

from app.cli.formatting import render_text
from app.cli.parser import build_parser, normalize_argv
from app.cli.registry import get_command
from app.cli.session import CommandSession
from app.exceptions import SupertypicalError
from app.logger import configure_logging, get_logger
from app.schemas import ErrorResponse
from app.settings import get_settings

logger = get_logger("cli")

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE = 2


def _emit(model: BaseModel, as_json: bool, stream: TextIO) -> None:
    if as_json:
        stream.write(json.dumps(model.model_dump(mode="json"), indent=2) + "\n")
    else:
        stream.write(render_text(model) + "\n")


def run(
    argv: Optional[Sequence[str]] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    """
    Parse argv, dispatch the subcommand and write its result

    Returns:
        0 on success, 1 on a domain error (or failed selftest), 2 on a usage error
    """
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(normalize_argv(sys.argv[1:] if argv is None else argv))
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    try:
        settings = get_settings(config_path=Path(args.config) if args.config else None)
        configure_logging(args.log_level or settings.log.level, stream=err)
        command = get_command(args.command)
        logger.info("Command started", command=args.command, family=getattr(args, "family", None))
        response = command.execute(args, CommandSession(settings=settings))
    except SupertypicalError as e:
        logger.error("Command failed", command=args.command, error=e.message, error_type=type(e).__name__)
        err.write(f"error: {e.message}\n")
        if args.json:
            _emit(ErrorResponse(**e.to_dict()), True, out)
        return EXIT_DOMAIN_ERROR

    _emit(response, args.json, out)
    logger.info("Command finished", command=args.command)
    return command.exit_code(response)
