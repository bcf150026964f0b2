import sys
import logging

from config.settings import configure_logging
from routes.main_router import run

# Configure logging
configure_logging()
logger = logging.getLogger(__name__)


if __name__ == '__main__':
  logger.info("[App] Starting weightlat command")
  sys.exit(run(sys.argv[1:]))
