"""Tests for settings, budgets and error mapping."""

from fractions import Fraction

import pytest
from pydantic import ValidationError

from suig2.cli.exceptions import handle_errors
from suig2.cli.inputs import with_epsilon
from suig2.config import Settings, get_settings
from suig2.core.budget import Deadline
from suig2.core.exceptions import BudgetExceededError, InternalError, ParseError, TooLargeError


class TestSettings:
    def test_defaults(self, settings: Settings) -> None:
        assert settings.epsilon_value == Fraction(1, 2)
        assert settings.claw_constant_value == Fraction(1, 4)
        assert settings.verify_accepts

    def test_environment(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("SUIG2_EPSILON", "1/3")
        assert get_settings().epsilon_value == Fraction(1, 3)

    @pytest.mark.parametrize("epsilon", ["0", "1", "2/3/4", "x"])
    def test_bad_epsilon(self, epsilon: str) -> None:
        with pytest.raises(ValidationError):
            Settings(_env_file=None, epsilon=epsilon)

    def test_bad_claw_constant(self) -> None:
        with pytest.raises(ValidationError):
            Settings(_env_file=None, claw_constant="1/2")

    def test_with_epsilon(self, settings: Settings) -> None:
        assert with_epsilon(settings, None) is settings
        assert with_epsilon(settings, "1/4").epsilon_value == Fraction(1, 4)


class TestDeadline:
    def test_unbounded(self) -> None:
        deadline = Deadline()
        deadline.check()
        assert not deadline.expired

    def test_expired(self) -> None:
        with pytest.raises(BudgetExceededError) as info:
            Deadline(1e-12).check("test")
        assert info.value.exit_code == 3


class TestExitCodes:
    @pytest.mark.parametrize(
        "exc, code",
        [
            (ParseError("bad token"), 2),
            (TooLargeError(13, 12), 2),
            (BudgetExceededError(), 3),
            (InternalError("broken"), 1),
            (FileNotFoundError(2, "No such file", "x.txt"), 2),
            (RuntimeError("boom"), 1),
        ],
    )
    def test_mapping(self, exc: BaseException, code: int) -> None:
        assert handle_errors(exc) == code
