"""
精度配置
"""
import pytest

from config.precision import PrecisionConfig, precision_config
from config.settings import COMPUTE_CONFIG


def test_explicit_bits_win(monkeypatch):
    monkeypatch.setattr(PrecisionConfig, "FEYNKIT_PREC", "192")
    assert precision_config.resolve_bits(80) == 80
    assert precision_config.resolve_bits() == 192


def test_profile_name(monkeypatch):
    monkeypatch.setattr(PrecisionConfig, "FEYNKIT_PREC", "fast")
    assert precision_config.make_context().prec == 64


def test_invalid_environment_falls_back(monkeypatch):
    monkeypatch.setattr(PrecisionConfig, "FEYNKIT_PREC", "32")
    assert not precision_config.validate_config()
    assert precision_config.resolve_bits() == COMPUTE_CONFIG["default_prec"]


def test_unknown_profile():
    assert "strict" in precision_config.list_available_profiles()
    with pytest.raises(ValueError):
        precision_config.get_profile_info("turbo")


def test_contexts_are_independent():
    a = precision_config.make_context(64)
    b = precision_config.make_context(256)
    assert (a.prec, b.prec) == (64, 256)


def test_logging_level_and_file(monkeypatch, tmp_path):
    import logging

    from config.settings import LOG_CONFIG, setup_logging

    monkeypatch.setitem(LOG_CONFIG, "file", "")
    root = setup_logging("debug")
    try:
        assert root.level == logging.DEBUG
        assert len(root.handlers) == 1
        monkeypatch.setitem(LOG_CONFIG, "file", str(tmp_path / "logs" / "run.log"))
        root = setup_logging()
        assert len(root.handlers) == 2
        assert (tmp_path / "logs").is_dir()
    finally:
        for handler in root.handlers:
            handler.close()
        monkeypatch.setitem(LOG_CONFIG, "file", "")
        setup_logging()
