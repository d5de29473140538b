import pytest

from teamcraft.model import ScoreMatrix, TeamAssembly

# 4-participant beta-test matrices. The two role sets share one underlying
# six-role score table (TE scores were never exercised and default to 0).
R1_ROLES = ("IN", "DE", "IM", "CO")
R1_ROWS = (
    (23, 257, 83, 256),
    (103, 60, 20, 290),
    (10, 150, 61, 238),
    (50, 141, 61, 0),
)

R2_ROLES = ("DE", "AN", "IM", "CO")
R2_ROWS = (
    (257, 97, 83, 256),
    (60, 0, 20, 290),
    (150, 10, 61, 238),
    (141, 55, 61, 0),
)

BETA_CSV = """\
participant,IN,DE,AN,IM,TE,CO
1,23,257,97,83,0,256
2,103,60,0,20,0,290
3,10,150,10,61,0,238
4,50,141,55,61,0,0
"""


@pytest.fixture
def beta_r1() -> ScoreMatrix:
    return ScoreMatrix.from_rows(R1_ROWS, R1_ROLES)


@pytest.fixture
def beta_r2() -> ScoreMatrix:
    return ScoreMatrix.from_rows(R2_ROWS, R2_ROLES)


@pytest.fixture
def one_team() -> TeamAssembly:
    return TeamAssembly((1, 1, 1, 1), 1)


@pytest.fixture
def beta_csv_path(tmp_path):
    path = tmp_path / "beta.csv"
    path.write_text(BETA_CSV)
    return path
