"""Root __init__ of the awmc module setting the __all__ of awmc modules."""
# isort: skip_file

from awmc import error
from awmc.version import VERSION as __version__

from awmc.core import Model
from awmc.formula import Formula, parse, to_text
from awmc.models import HmsModel, KripkeLatticeModel, ThreeVal
from awmc.registration import make, spec, register
from awmc import logger
from awmc import formula
from awmc import models
from awmc import transforms
from awmc import logic

__all__ = [
    "Model",
    "HmsModel",
    "KripkeLatticeModel",
    "ThreeVal",
    "Formula",
    "parse",
    "to_text",
    "make",
    "spec",
    "register",
]
