from qform_pipeline.forms.binary_form import Form
from qform_pipeline.forms.unimodular_map import UnimodularMap


def transform(form: Form, transformation: UnimodularMap) -> Form:
    """
    Return the form ``(x, y) -> form(p*x + q*y, r*x + s*y)``.

    Transforming by ``U`` and then by ``V`` equals transforming by ``U * V``.
    """

    a, b, c = form.a, form.b, form.c
    p, q, r, s = transformation.as_tuple()

    return Form(
        form.evaluate(p, r),
        2 * a * p * q + b * (p * s + q * r) + 2 * c * r * s,
        form.evaluate(q, s),
    )
