from pathlib import Path
import sys

project_root = Path(__file__).parent.resolve()
if str(project_root) not in sys.path:
    sys.path.insert(0, str(project_root))

from infrastructure.logging.logger import setup_logging, get_logger
from core.config import get_settings, ensure_env_file

setup_logging()
logger = get_logger(__name__)

ensure_env_file()
settings = get_settings()


def main(argv=None) -> int:
    """
    Entry point of the toolkit's command line. See `python main.py --help`.
    """
    from app.main_app import run_command

    logger.debug(f"{settings.APP_NAME} {settings.APP_VERSION}, default field {settings.DEFAULT_FIELD}, cap {settings.ITERATION_CAP}")
    try:
        return run_command(argv)
    except KeyboardInterrupt:
        logger.warning("Interrupted")
        return 130
    except Exception as e:
        logger.error(f"Failed to run command: {e}", exc_info=True)
        return 1


if __name__ == "__main__":
    sys.exit(main())
