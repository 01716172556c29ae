from characters.character import (
    Character,
    divide,
    invert,
    make_character,
    modular_character,
    nu_power,
    restrict,
    s_of,
    trivial_character,
)
from characters.codec import (
    character_from_json,
    character_to_json,
    format_character,
    parse_character,
)
from characters.errors import (
    DomainError,
    GridError,
    PreconditionError,
    ToolkitError,
    UnsupportedFieldError,
    ValidationError,
)
from characters.field import FieldKind
from characters.induced import InducedRepDesc, induced_from, normalize
from characters.rational import ComplexRational, fraction_str, is_integer, to_fraction
