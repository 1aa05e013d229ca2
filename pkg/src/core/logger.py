import logging
import sys
import os
from typing import Optional, Dict

from src.schemas.config import config

class LoggerManager:
    """Manages logger configuration and state."""
    
    def __init__(self):
        self._loggers: Dict[str, logging.Logger] = {}
        self._setup_complete = False
    
    def setup_logging(self, level: Optional[str] = None) -> None:
        """Setup logging configuration.

        Diagnostics go to stderr; stdout belongs to command payloads.
        A non-None ``level`` reconfigures even after the first setup.
        """
        if self._setup_complete and level is None:
            return
        
        handlers = [logging.StreamHandler(sys.stderr)]
        if config.log_file:
            log_dir = os.path.dirname(config.log_file)
            if log_dir and not os.path.exists(log_dir):
                os.makedirs(log_dir, exist_ok=True)
            handlers.append(logging.FileHandler(config.log_file, encoding='utf-8'))
        
        logging.basicConfig(
            level=getattr(logging, (level or config.log_level.value).upper()),
            format=config.log_format,
            datefmt=config.log_date_format,
            handlers=handlers,
            force=True  
        )
        
        self._setup_complete = True
    
    def get_logger(self, name: str) -> logging.Logger:
        """Get a configured logger instance.
        
        Args:
            name: Logger name (usually __name__)
            
        Returns:
            Configured logger instance
        """
        if not self._setup_complete:
            self.setup_logging()
            
        if name not in self._loggers:
            self._loggers[name] = logging.getLogger(name)
        
        return self._loggers[name]


# Global logger manager instance
_logger_manager = LoggerManager()

# Convenience functions
def setup_logging(level: Optional[str] = None) -> None:
    """Setup logging configuration, optionally forcing a level."""
    _logger_manager.setup_logging(level)


def get_logger(name: str) -> logging.Logger:
    """Get a configured logger instance shared per name."""
    return _logger_manager.get_logger(name)
