from enum import Enum

from characters.errors import ValidationError


class FieldKind(str, Enum):
    """The local field F of GL(n, F).

    Non-archimedean fields carry no further data: every criterion used by the
    toolkit is uniform over them.
    """

    REAL = "R"
    COMPLEX = "C"
    NON_ARCHIMEDEAN = "NA"

    @property
    def is_archimedean(self) -> bool:
        return self is not FieldKind.NON_ARCHIMEDEAN

    @classmethod
    def parse(cls, value: "str | FieldKind") -> "FieldKind":
        """Accept ``R``/``Real``, ``C``/``Complex``, ``NA``/``NonArch``/``p-adic``."""
        if isinstance(value, FieldKind):
            return value
        key = str(value).strip().lower().replace("_", "").replace("-", "")
        aliases = {
            "r": cls.REAL,
            "real": cls.REAL,
            "c": cls.COMPLEX,
            "complex": cls.COMPLEX,
            "na": cls.NON_ARCHIMEDEAN,
            "nonarch": cls.NON_ARCHIMEDEAN,
            "nonarchimedean": cls.NON_ARCHIMEDEAN,
            "padic": cls.NON_ARCHIMEDEAN,
        }
        if key not in aliases:
            raise ValidationError(f"unknown local field {value!r}", field="field")
        return aliases[key]
