import hypothesis.strategies as st
from hypothesis import settings

from psfknots.words import Word

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

LETTERS = (1, -1, 2, -2)


def letter_lists(min_size=0, max_size=30):
    return st.lists(st.sampled_from(LETTERS), min_size=min_size, max_size=max_size)


def free_reduce(letters):
    # stack reduction, independent of the syllable code
    out = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return out


def cyclically_reduce(letters):
    w = free_reduce(letters)
    while len(w) > 1 and w[0] == -w[-1]:
        w = w[1:-1]
    return w


@st.composite
def words(draw, min_size=0, max_size=30):
    return Word.from_letters(draw(letter_lists(min_size, max_size)))


@st.composite
def cyclic_letters(draw, min_size=1, max_size=30):
    w = cyclically_reduce(draw(letter_lists(min_size, max_size)))
    if not w:
        w = [draw(st.sampled_from(LETTERS))]
    return w


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
