"""Flag grammars for test functions, regularizers and states.

    gaussian:s=1,x=0,y=0,z=0,a=1[,klo=..,khi=..]
    box:hx=0.5,hy=0.5,hz=0.5,x=0,y=0,z=0,a=1[,klo=..,khi=..]
    kg | gaussian | cutoff:L=2 | expmass:L=2 | power:a=2
    vacuum | n:1|2|3 | coherent | superposition:ur=..,ui=..,vr=..,vi=..
    vacuum | one-particle:g=<test function>
"""

from __future__ import annotations

from pydantic import ValidationError

from ..errors import ConfigurationError
from ..spectral.regularizers import Regularizer
from ..spectral.test_functions import TestFunction
from ..states.models import StateSpec

ONE_PARTICLE_PREFIX = "one-particle:g="


def _split(text: str, allowed: set[str], what: str) -> tuple[str, dict[str, float]]:
    kind, _, rest = text.strip().partition(":")
    values: dict[str, float] = {}
    for item in filter(None, (part.strip() for part in rest.split(","))):
        key, sep, raw = item.partition("=")
        if not sep:
            raise ConfigurationError(f"{what} '{text}': expected key=value, got '{item}'")
        if key not in allowed:
            raise ConfigurationError(f"{what} '{text}': unknown key '{key}' (allowed: {', '.join(sorted(allowed))})")
        try:
            values[key] = float(raw)
        except ValueError:
            raise ConfigurationError(f"{what} '{text}': '{raw}' is not a number") from None
    return kind, values


def parse_test_function(text: str) -> TestFunction:
    kind, values = _split(text, {"s", "hx", "hy", "hz", "x", "y", "z", "a", "klo", "khi"}, "test function")
    center = (values.get("x", 0.0), values.get("y", 0.0), values.get("z", 0.0))
    amplitude = values.get("a", 1.0)
    try:
        if kind == "gaussian":
            if "s" not in values:
                raise ConfigurationError(f"test function '{text}': gaussian needs s=<width>")
            tf = TestFunction.gaussian(values["s"], center=center, amplitude=amplitude)
        elif kind == "box":
            try:
                half_widths = (values["hx"], values["hy"], values["hz"])
            except KeyError:
                raise ConfigurationError(f"test function '{text}': box needs hx, hy and hz") from None
            tf = TestFunction.box(half_widths, center=center, amplitude=amplitude)
        else:
            raise ConfigurationError(f"test function '{text}': kind must be gaussian or box")
        if "klo" in values or "khi" in values:
            tf = tf.spectral_window(values.get("klo", 0.0), values.get("khi", float("inf")))
    except ValidationError as e:
        raise ConfigurationError(f"test function '{text}': {e.errors()[0]['msg']}") from e
    return tf


def parse_regularizer(text: str, mass: float, kT: float, hbar: float) -> Regularizer:
    kind, values = _split(text, {"L", "a"}, "regularizer")
    try:
        if kind == "kg":
            return Regularizer.kg_vacuum(mass, kT=kT, hbar=hbar)
        if kind == "gaussian":
            return Regularizer.gaussian_model(mass, kT=kT, hbar=hbar)
        if kind == "cutoff":
            return Regularizer.sharp_cutoff(mass, values["L"], kT=kT, hbar=hbar)
        if kind == "expmass":
            return Regularizer.exp_mass(mass, values["L"], kT=kT, hbar=hbar)
        if kind == "power":
            return Regularizer.power_law(mass, values["a"], kT=kT, hbar=hbar)
    except KeyError as e:
        raise ConfigurationError(f"regularizer '{text}' needs {e.args[0]}=<value>") from None
    except ValidationError as e:
        raise ConfigurationError(f"regularizer '{text}': {e.errors()[0]['msg']}") from e
    raise ConfigurationError(f"regularizer '{text}': kind must be kg, gaussian, cutoff, expmass or power")


def parse_complex(text: str) -> complex:
    try:
        return complex(text.replace(" ", ""))
    except ValueError:
        raise ConfigurationError(f"'{text}' is not a complex number") from None


def parse_state(text: str, ff: float, gg: float, fg: complex) -> StateSpec:
    kind, _, rest = text.strip().partition(":")
    try:
        if kind == "vacuum":
            return StateSpec.vacuum(ff)
        if kind == "n":
            if rest not in ("1", "2", "3"):
                raise ConfigurationError(f"state '{text}': particle number must be 1, 2 or 3")
            return StateSpec.n_particle(int(rest), ff=ff, gg=gg, fg=fg)
        if kind == "coherent":
            return StateSpec.coherent(ff=ff, gg=gg, fg=fg)
        if kind == "superposition":
            _, values = _split(text, {"ur", "ui", "vr", "vi"}, "state")
            u = complex(values.get("ur", 0.0), values.get("ui", 0.0))
            v = complex(values.get("vr", 0.0), values.get("vi", 0.0))
            return StateSpec.superposition(u, v, ff=ff, gg=gg, fg=fg)
    except ValidationError as e:
        raise ConfigurationError(f"state '{text}': {e.errors()[0]['msg']}") from e
    raise ConfigurationError(f"state '{text}': kind must be vacuum, n:<1|2|3>, coherent or superposition")


def parse_ensemble_state(text: str) -> TestFunction | None:
    """None for the vacuum, else the test function g of a one-particle ensemble."""
    text = text.strip()
    if text == "vacuum":
        return None
    if text.startswith(ONE_PARTICLE_PREFIX):
        return parse_test_function(text[len(ONE_PARTICLE_PREFIX) :])
    raise ConfigurationError(f"ensemble state '{text}': use vacuum or one-particle:g=<test function>")


__all__ = [
    "parse_test_function",
    "parse_regularizer",
    "parse_complex",
    "parse_state",
    "parse_ensemble_state",
]
