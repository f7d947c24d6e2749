"""Unit tests for the CLI configuration models and loaders."""

import json

import pytest
from pydantic import ValidationError

from cli.config import (
    RelationsConfig,
    VerifyConfig,
    _read_config,
    load_relations_config,
    load_verify_config,
)
from src.config.constants import DEFAULT_ORDER
from src.core.words import e


@pytest.mark.unit
class TestVerifyConfig:
    """Test the verify configuration model."""

    def test_defaults(self):
        """Test the default suite settings."""
        cfg = VerifyConfig()
        assert cfg.checks == ["all"]
        assert cfg.order == DEFAULT_ORDER
        assert cfg.workers == 1
        assert cfg.output is None

    def test_check_names_normalized(self):
        """Test that dashes and case are normalized."""
        assert VerifyConfig(checks=["Prop-DGK"]).checks == ["prop_dgk"]

    @pytest.mark.edge_case
    def test_unknown_check(self):
        """Test that unknown checks fail validation."""
        with pytest.raises(ValidationError):
            VerifyConfig(checks=["nope"])

    @pytest.mark.edge_case
    def test_empty_checks(self):
        """Test that at least one check is required."""
        with pytest.raises(ValidationError):
            VerifyConfig(checks=[])

    @pytest.mark.edge_case
    @pytest.mark.parametrize("field,value", [("order", -1), ("workers", 0), ("kmax", 0), ("log_level", "LOUD")])
    def test_bounds(self, field, value):
        """Test field constraints."""
        with pytest.raises(ValidationError):
            VerifyConfig(**{field: value})


@pytest.mark.unit
class TestRelationsConfig:
    """Test the relations configuration model."""

    def test_words(self):
        """Test that extra words are parsed."""
        cfg = RelationsConfig(extra_words=["e(4,1)", "e(2)e(3)"])
        assert cfg.words() == [e(4, 1), e(2) + e(3)]

    @pytest.mark.edge_case
    def test_bad_word(self):
        """Test that malformed words fail validation."""
        with pytest.raises(ValidationError):
            RelationsConfig(extra_words=["e(0)"])


@pytest.mark.unit
class TestLoaders:
    """Test reading TOML and JSON files."""

    def test_load_verify_toml(self, temp_output_dir):
        """Test a TOML verify config with per-check parameters."""
        path = temp_output_dir / "verify.toml"
        path.write_text(
            'checks = ["lemma_gdsh1"]\norder = 30\n\n[parameters.lemma_gdsh1]\ncase = "i"\nindices = [1, 2, 2]\n',
            encoding="utf-8",
        )
        cfg = load_verify_config(path)
        assert cfg.checks == ["lemma_gdsh1"]
        assert cfg.order == 30
        assert cfg.parameters["lemma_gdsh1"] == {"case": "i", "indices": [1, 2, 2]}

    def test_load_relations_json(self, temp_output_dir):
        """Test a JSON relations config."""
        path = temp_output_dir / "relations.json"
        path.write_text(json.dumps({"weight": 4, "exact_weight": True}), encoding="utf-8")
        cfg = load_relations_config(path)
        assert cfg.weight == 4
        assert cfg.exact_weight

    @pytest.mark.edge_case
    def test_unsupported_suffix(self, temp_output_dir):
        """Test that only .toml and .json are read."""
        path = temp_output_dir / "config.yaml"
        path.write_text("order: 3\n", encoding="utf-8")
        with pytest.raises(ValueError, match="Unsupported"):
            _read_config(path)
