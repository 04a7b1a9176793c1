import pytest

from fracalc import DemoId, demo_process


@pytest.fixture(scope="session")
def fig1():
    return demo_process(DemoId.FIG1)


@pytest.fixture(scope="session")
def fig2():
    return demo_process(DemoId.FIG2)
