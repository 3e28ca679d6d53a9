"""Registry of named models, so bundled fixtures can be made by id like ``TradeHMS-v0``."""
import copy
import difflib
import importlib
import re
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Callable, Dict, List, Optional, Tuple, Union

from awmc import error, logger

if TYPE_CHECKING:
    from awmc.core import Model

MODEL_ID_RE = re.compile(r"^(?P<name>[\w:.-]+?)(?:-v(?P<version>\d+))?$")


def load(name: str) -> Callable:
    """Loads the callable named ``module:attr``.

    Args:
        name: The entry point

    Returns:
        The model creation function
    """
    mod_name, attr_name = name.split(":")
    mod = importlib.import_module(mod_name)
    return getattr(mod, attr_name)


def parse_model_id(id: str) -> Tuple[str, Optional[int]]:
    """Splits a model id of the form ``name-vN`` into name and version.

    Raises:
        RegistrationError: If ``id`` is malformed
    """
    match = MODEL_ID_RE.fullmatch(id)
    if not match:
        raise error.RegistrationError(
            f"Malformed model ID: {id}. (All IDs must be of the form (model-name)-v(version).)"
        )
    name, version = match.group("name", "version")
    return name, None if version is None else int(version)


def get_model_id(name: str, version: Optional[int]) -> str:
    """Inverse of :func:`parse_model_id`."""
    return name if version is None else f"{name}-v{version}"


@dataclass
class ModelSpec:
    """A specification for creating models with :func:`make`.

    * id: The string used to create the model with :func:`make`
    * entry_point: A callable or ``module:attr`` string building the model
    * kind: The kind the created model must have, ``"kripke_lattice"`` or ``"hms"``
    * kwargs: Keyword arguments passed to the entry point
    """

    id: str
    entry_point: Union[Callable, str]
    kind: Optional[str] = field(default=None)
    kwargs: dict = field(default_factory=dict)

    name: str = field(init=False)
    version: Optional[int] = field(init=False)

    def __post_init__(self):
        self.name, self.version = parse_model_id(self.id)

    def make(self, **kwargs) -> "Model":
        return make(self, **kwargs)


registry: Dict[str, ModelSpec] = {}


def _check_name_exists(name: str):
    names = {spec_.name for spec_ in registry.values()}
    if name in names:
        return
    suggestion = difflib.get_close_matches(name, names, n=1)
    suggestion_msg = f"Did you mean: `{suggestion[0]}`?" if suggestion else ""
    raise error.NameNotFound(f"Model {name} doesn't exist. {suggestion_msg}")


def _check_version_exists(name: str, version: Optional[int]):
    if get_model_id(name, version) in registry:
        return
    _check_name_exists(name)
    if version is None:
        return
    versions: List[int] = sorted(
        spec_.version
        for spec_ in registry.values()
        if spec_.name == name and spec_.version is not None
    )
    version_list_msg = ", ".join(f"`v{v}`" for v in versions)
    raise error.VersionNotFound(
        f"Model version `v{version}` for model `{name}` doesn't exist. "
        f"It provides versioned models: [ {version_list_msg} ]."
    )


def find_highest_version(name: str) -> Optional[int]:
    return max(
        (
            spec_.version
            for spec_ in registry.values()
            if spec_.name == name and spec_.version is not None
        ),
        default=None,
    )


def register(id: str, entry_point: Union[Callable, str], kind: Optional[str] = None, **kwargs):
    """Registers a model under ``id``.

    Args:
        id: The model id, ``name-vN``
        entry_point: The callable or ``module:attr`` string creating the model
        kind: The kind the model must have, checked by :func:`make`
        **kwargs: Keyword arguments passed to the entry point
    """
    new_spec = ModelSpec(id=id, entry_point=entry_point, kind=kind, kwargs=kwargs)
    if new_spec.id in registry:
        logger.warn("Overriding model %s already in registry.", new_spec.id)
    registry[new_spec.id] = new_spec


def spec(model_id: str) -> ModelSpec:
    """Retrieve the spec for the given model from the global registry."""
    spec_ = registry.get(model_id)
    if spec_ is None:
        name, version = parse_model_id(model_id)
        _check_version_exists(name, version)
        raise error.Unregistered(f"No registered model with id: {model_id}")
    return spec_


def make(id: Union[str, ModelSpec], **kwargs) -> "Model":
    """Create a model according to the given ID.

    An id without version resolves to the highest registered version.

    Args:
        id: The model id or its spec
        kwargs: Additional arguments to pass to the entry point

    Returns:
        The model, with its ``spec`` set

    Raises:
        Unregistered: If no model is registered under ``id``
        ModelFileError: If the model created has another kind than registered
    """
    if isinstance(id, ModelSpec):
        spec_ = id
    else:
        name, version = parse_model_id(id)
        if version is None:
            latest = find_highest_version(name)
            if latest is not None:
                id = get_model_id(name, latest)
        spec_ = spec(id)

    _kwargs = spec_.kwargs.copy()
    _kwargs.update(kwargs)
    creator = spec_.entry_point if callable(spec_.entry_point) else load(spec_.entry_point)
    model = creator(**_kwargs)
    if spec_.kind is not None and model.kind != spec_.kind:
        raise error.ModelFileError(
            f"Model {spec_.id} is registered as {spec_.kind} but created a {model.kind} model"
        )

    spec_ = copy.deepcopy(spec_)
    spec_.kwargs = _kwargs
    model.spec = spec_
    return model


def is_registered(ref: str) -> bool:
    """Whether ``ref`` names a registered model, with or without version."""
    match = MODEL_ID_RE.fullmatch(ref)
    if match is None:
        return False
    name, version = parse_model_id(ref)
    return ref in registry or (version is None and find_highest_version(name) is not None)
