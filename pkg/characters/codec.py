"""Text and JSON forms of characters.

Text grammar (factors joined by ``*``, each optional except that an empty
string is refused)::

    [eps^a*][alpha^k*]nu^{num/den[+num/den i]}

``1`` denotes the trivial character.
"""

import re
from typing import Any, Dict, List, Optional

from characters.character import Character, make_character
from characters.errors import ValidationError
from characters.field import FieldKind
from characters.rational import ComplexRational, fraction_pair, to_fraction

_EXP = r"\{?\s*(-?\d+)\s*\}?"
_EPS = re.compile(rf"^eps(?:\^{_EXP})?$")
_ALPHA = re.compile(rf"^alpha(?:\^{_EXP})?$")
_NU = re.compile(r"^nu(?:\^\{(?P<body>[^}]*)\}|\^(?P<bare>-?\d+(?:/\d+)?))?$")
_NU_BODY = re.compile(
    r"^(?P<re>[+-]?\d+(?:/\d+)?)"
    r"(?:\s*(?P<sign>[+-])\s*(?P<im>\d+(?:/\d+)?)?\s*i)?$"
)


def _parse_nu_body(body: str) -> ComplexRational:
    match = _NU_BODY.match(body.strip())
    if not match:
        raise ValidationError(f"cannot read nu exponent {body!r}", field="nu_exp")
    re_part = to_fraction(match.group("re"), "nu_exp")
    im_part = to_fraction(match.group("im") or "1", "nu_exp") if match.group("sign") else 0
    if match.group("sign") == "-":
        im_part = -im_part
    return ComplexRational(re_part, im_part)


def parse_character(
    text: str, field: "FieldKind | str", p: int, ramified: bool = False, name: str = "chi"
) -> Character:
    """Parse the text grammar into a character of GL_p(F).

    Errors are reported against ``name``, the parameter the text came from.

    Example:
        >>> str(parse_character("eps^1*nu^{3/2}", "R", 2))
        'eps^1*nu^{3/2}'
    """
    field = FieldKind.parse(field)
    tokens = [t.strip() for t in str(text).split("*") if t.strip()]
    if not tokens:
        raise ValidationError("empty character string", field=name)
    try:
        return _parse_tokens(tokens, text, field, p, ramified, name)
    except ValidationError as exc:
        if exc.field == name:
            raise
        raise ValidationError(str(exc), field=name) from exc


def _parse_tokens(tokens: List[str], text: str, field: FieldKind, p: int, ramified: bool, name: str) -> Character:
    sign_exp: Optional[int] = None
    alpha_exp: Optional[int] = None
    nu_exp = ComplexRational()
    for token in tokens:
        if token == "1":
            continue
        if m := _EPS.match(token):
            sign_exp = int(m.group(1) or 1)
        elif m := _ALPHA.match(token):
            alpha_exp = int(m.group(1) or 1)
        elif m := _NU.match(token):
            body = m.group("body") or m.group("bare") or "1"
            nu_exp = _parse_nu_body(body)
        else:
            raise ValidationError(f"unrecognised factor {token!r} in {text!r}", field=name)
    return make_character(field, p, sign_exp, alpha_exp, nu_exp, ramified)


def _format_nu(value: ComplexRational) -> str:
    if value.im == 0:
        return f"nu^{{{value.re}}}"
    sign = "+" if value.im > 0 else "-"
    return f"nu^{{{value.re}{sign}{abs(value.im)}i}}"


def format_character(chi: Character) -> str:
    """Canonical text form; zero eps/alpha exponents are omitted."""
    parts = []
    if chi.sign_exp:
        parts.append(f"eps^{chi.sign_exp}")
    if chi.alpha_exp:
        parts.append(f"alpha^{chi.alpha_exp}")
    parts.append(_format_nu(chi.nu_exp))
    text = "*".join(parts)
    return f"{text}[ramified]" if chi.ramified else text


def character_to_json(chi: Character) -> Dict[str, Any]:
    return {
        "field": chi.field.value,
        "p": chi.p,
        "sign_exp": chi.sign_exp,
        "alpha_exp": chi.alpha_exp,
        "nu_re": fraction_pair(chi.nu_exp.re),
        "nu_im": fraction_pair(chi.nu_exp.im),
        "ramified": chi.ramified,
    }


def character_from_json(payload: Dict[str, Any]) -> Character:
    """Inverse of :func:`character_to_json`; also accepts ``p = 0``."""
    try:
        nu = ComplexRational(
            to_fraction(payload.get("nu_re", [0, 1]), "nu_re"),
            to_fraction(payload.get("nu_im", [0, 1]), "nu_im"),
        )
        return Character(
            FieldKind.parse(payload["field"]),
            int(payload["p"]),
            payload.get("sign_exp"),
            payload.get("alpha_exp"),
            nu,
            bool(payload.get("ramified", False)),
        )
    except KeyError as exc:
        raise ValidationError("missing key", field=str(exc.args[0])) from exc
