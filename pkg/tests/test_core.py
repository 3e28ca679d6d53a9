import pytest

from awmc import core, error
from awmc.formula import Formula, Knows, Top
from awmc.models import ThreeVal
from tests.testing_models import rw, trade_hms, trade_klm


class ConstantModel(core.Model[str]):
    """Every formula over its vocabulary is true at its single world ``here``."""

    kind = "constant"
    atom_set = frozenset({"p"})
    agents = ("a",)

    def satisfies(self, world: str, phi: Formula) -> ThreeVal:
        self.check_formula(phi)
        return ThreeVal.TRUE

    def worlds(self):
        return ("here",)

    def resolve_world(self, ref: str) -> str:
        if ref != "here":
            raise error.UnknownWorld(f"Unknown world {ref}")
        return ref


class UnimplementedModel(core.Model[str]):
    pass


def test_check():
    model = ConstantModel()
    assert model.check("here", "K{a} p") == ThreeVal.TRUE
    with pytest.raises(error.UnknownAtom):
        model.check("here", "q")
    with pytest.raises(error.UnknownAgent):
        model.satisfies("here", Knows("b", Top()))
    with pytest.raises(error.UnknownWorld):
        model.check("there", "p")


def test_unimplemented_model():
    model = UnimplementedModel()
    with pytest.raises(NotImplementedError):
        model.satisfies("w", Top())
    with pytest.raises(NotImplementedError):
        model.worlds()
    with pytest.raises(NotImplementedError):
        model.resolve_world("w")


def test_str():
    model = ConstantModel()
    assert str(model) == "<ConstantModel instance>"
    assert model.world_text("here") == "here"


def test_both_model_kinds_share_the_interface():
    hms, klm = trade_hms(), trade_klm()
    assert isinstance(hms, core.Model) and isinstance(klm, core.Model)
    assert (hms.kind, klm.kind) == ("hms", "kripke_lattice")
    assert hms.atom_set == klm.atom_set == {"i", "l"}
    assert tuple(hms.agents) == tuple(klm.agents) == ("B", "O")
    assert klm.world_text(rw("w1@{i,l}")) == "w1@{i,l}"
    for world in klm.worlds():
        assert klm.resolve_world(klm.world_text(world)) == world
    for state in hms.worlds():
        assert hms.resolve_world(hms.world_text(state)) == state
