import pytest

from lattice_pricer.cli import CLIApplication
from lattice_pricer.coefficients import CoefficientCurve
from lattice_pricer.errors import ConfigValidationError, DomainError
from lattice_pricer.models import (
    CRRModel,
    KSRFModel,
    ModelFactory,
    get_model,
    get_model_info,
    list_models,
    register_model,
    unregister_model,
)

from conftest import make_market


class AliasCRRModel(CRRModel):
    """CRR tree registered under a second name."""

    name = "crr-alias"


@pytest.fixture
def alias_model():
    register_model(AliasCRRModel)
    yield AliasCRRModel
    unregister_model(AliasCRRModel.name)


class TestModelFactory:
    def test_builtin_models(self):
        assert ModelFactory().model_names() == ["crr-td", "ksrf-td", "tri-classical", "tri-new"]

    def test_create_passes_the_p_curve(self):
        model = ModelFactory().create("ksrf-td", make_market(), CoefficientCurve.constant(0.3))
        assert isinstance(model, KSRFModel)
        assert model.p_curve == CoefficientCurve.constant(0.3)

    def test_unknown_model(self):
        with pytest.raises(ConfigValidationError) as excinfo:
            ModelFactory().create("heston", make_market())
        assert excinfo.value.field == "model"
        with pytest.raises(ConfigValidationError):
            ModelFactory().get_model_info("heston")

    def test_duplicate_name_needs_replace(self):
        factory = ModelFactory()
        with pytest.raises(DomainError):
            factory.register_model(CRRModel)
        factory.register_model(CRRModel, replace=True)
        assert factory.model_names().count("crr-td") == 1

    @pytest.mark.parametrize("candidate", [object, "crr-td", CRRModel(make_market())])
    def test_rejects_non_models(self, candidate):
        with pytest.raises(DomainError):
            ModelFactory().register_model(candidate)

    def test_unregister_unknown(self):
        with pytest.raises(DomainError):
            ModelFactory().unregister_model("heston")

    def test_model_info(self):
        info = get_model_info("tri-new")
        assert info["branches"] == 3
        assert info["supports_hedging"] is False
        assert info["worlds"] == ["natural", "risk-neutral"]


class TestRegisteredModel:
    def test_listed_and_created(self, alias_model):
        assert "crr-alias" in list_models()
        assert isinstance(get_model("crr-alias", make_market()), alias_model)
        assert get_model_info("crr-alias")["description"] == "CRR tree registered under a second name."

    def test_gone_after_unregister(self):
        register_model(AliasCRRModel)
        unregister_model("crr-alias")
        assert "crr-alias" not in list_models()

    def test_priced_through_the_cli(self, alias_model, write_config, capsys):
        app = CLIApplication()
        alias = app.run(["price", "--config", write_config({"model": "crr-alias"}), "--format", "json"])
        original = app.run(["price", "--config", write_config(), "--format", "json"])
        assert alias["exit_code"] == 0
        assert alias["result"]["model"] == "crr-alias"
        assert alias["result"]["root_price"] == original["result"]["root_price"]
