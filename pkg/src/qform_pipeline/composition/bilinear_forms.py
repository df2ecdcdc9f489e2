from qform_pipeline.composition.composition_context import CompositionContext
from qform_pipeline.composition.dirichlet_compose import composition_coefficients
from qform_pipeline.forms import Form


def fstar(form: Form, context: CompositionContext) -> Form:
    """Composite ``f*`` of ``form`` with ``F`` along the context's common ``B``."""

    return context.fstar(form)


def qf_bilinear(form: Form, context: CompositionContext, u: int, v: int, w: int, z: int) -> int:
    """
    Evaluate ``alpha v w + (u - k v) z`` with ``k = (B - b) / 2a``.

    This equals the second reconstructed coordinate at ``(-w, z)``, so it is
    congruent to that coordinate modulo ``alpha`` and coprime to ``alpha``.
    """

    k = composition_coefficients(form, context.F, context.B).k
    return context.F.a * v * w + (u - k * v) * z


def thin_coordinate(form: Form, context: CompositionContext, u: int, v: int, w: int, z: int) -> int:
    """First coordinate ``X`` of the representation rebuilt from ``(u, v; w, z)``."""

    _, j, l, g = composition_coefficients(form, context.F, context.B)
    return (form.a * u + g * v) * w + (j * u + l * v) * z
