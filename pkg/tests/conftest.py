import pytest

from weldkit.diagram import PlanarDiagram, Token


def word(text: str) -> list[Token]:
    """Parse a bare test word like 'O1+ U2+ ...' into tokens."""
    tokens = []
    for piece in text.split():
        role, body = piece[0], piece[1:]
        sign = 1 if body.endswith("+") else -1
        tokens.append(Token(role, int(body[:-1]), sign))
    return tokens


def diagram(text: str) -> PlanarDiagram:
    return PlanarDiagram(word(text))


TREFOIL = "O1+ U2+ O3+ U1+ O2+ U3+"
TREFOIL_MIRROR = "U1- O2- U3- O1- U2- O3-"
FIG_INF = "V1+ V1+"
VTREFOIL = "O1+ V3- O2+ U1+ V3- U2+"
TWO_KINK = "V1+ V1+ V2+ V2+"
NONPLANAR = "O1+ O2+ U1+ U2+"


@pytest.fixture
def trefoil():
    return diagram(TREFOIL)


@pytest.fixture
def fig_inf():
    return diagram(FIG_INF)
