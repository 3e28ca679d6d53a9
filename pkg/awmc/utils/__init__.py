"""Helpers shared across the model checker: terminal colours and seeded generators."""
from awmc.utils.colorize import colorize
