"""Exception hierarchy shared across the library."""


class LayextError(Exception):
    """Base class for every error raised by layext."""


class ZeroHasNoLayer(LayextError):
    """The zero element carries no layer; asking for one is an error."""


class BottomValue(LayextError):
    """A layered element cannot be built on the bottom (minus infinity) value."""


class InconsistentRelations(LayextError):
    """Declared monomial relations contradict each other or the numeric values."""


class NoSignChange(LayextError):
    """The polynomial has coefficients of one sign only and cannot be split."""


class Reducible(LayextError):
    """The candidate minimal polynomial factors over the rationals."""


class NoPositiveRoot(LayextError):
    """The candidate minimal polynomial has no positive real root."""


class IntervalNotIsolating(LayextError):
    """The given interval does not isolate exactly one positive root."""


class AllPositiveCoefficients(LayextError):
    """A single-signed annihilating polynomial would collapse the extension to a field."""


class TrivialExtension(LayextError):
    """The generator already lies in the base semifield (degree-one polynomial)."""


class GeneratorMismatch(LayextError):
    """Arithmetic mixed elements built over different algebraic generators."""


class ZeroElement(LayextError):
    """The zero element of the extension is not invertible."""


class ValueNotInBase(LayextError):
    """A pure-layer extension requires the scalar's value to lie in the base value group."""


class LayerNotInBase(LayextError):
    """A pure-value extension requires the scalar's layer to lie in the base sort part."""


class DescriptorMismatch(LayextError):
    """The inputs of an evaluation do not fit together (e.g. symbolic values)."""


class ParseError(LayextError):
    """Malformed input file or JSON document."""
