"""Data matrix container, CSV round-trip and the bundled 2004 cars table."""

import csv
from dataclasses import dataclass

import numpy as np

from .errors import CsvParseError, DimensionError, ParameterError


@dataclass(frozen=True)
class DataMatrix:
    """Numeric observation matrix with row labels and column names.

    Labels default to r1..rN and c1..cK when omitted. Values must be
    finite; missing data is not supported.
    """

    values: np.ndarray
    row_labels: tuple = ()
    column_names: tuple = ()

    def __post_init__(self):
        values = np.asarray(self.values, dtype=np.float64)
        if values.ndim != 2:
            raise DimensionError(f"expected a 2-D matrix, got shape {values.shape}")
        n, k = values.shape
        if n < 2 or k < 1:
            raise DimensionError(f"need at least 2 rows and 1 column, got {n}x{k}")
        if not np.all(np.isfinite(values)):
            i, j = np.argwhere(~np.isfinite(values))[0]
            raise ParameterError(f"non-finite value at row {i + 1}, column {j + 1}")
        row_labels = tuple(str(s) for s in self.row_labels)
        column_names = tuple(str(s) for s in self.column_names)
        if not row_labels:
            row_labels = tuple(f"r{i + 1}" for i in range(n))
        if not column_names:
            column_names = tuple(f"c{j + 1}" for j in range(k))
        if len(row_labels) != n:
            raise DimensionError(f"{len(row_labels)} row labels for {n} rows")
        if len(column_names) != k:
            raise DimensionError(f"{len(column_names)} column names for {k} columns")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "row_labels", row_labels)
        object.__setattr__(self, "column_names", column_names)

    @property
    def n_obs(self):
        return self.values.shape[0]

    @property
    def n_cols(self):
        return self.values.shape[1]


def as_data_matrix(X):
    """Coerce an array-like to DataMatrix, passing DataMatrix through."""
    if isinstance(X, DataMatrix):
        return X
    return DataMatrix(np.asarray(X, dtype=np.float64))


def load_csv(path, has_row_labels=True):
    """Load a numeric matrix from a UTF-8 CSV file.

    The first row is the header. With has_row_labels (the default) the
    first column holds observation labels and its header cell is ignored.
    Ragged rows, non-numeric cells and duplicate column names raise
    CsvParseError naming the offending position.
    """
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            rows = [r for r in csv.reader(fh) if r]
    except OSError as exc:
        raise CsvParseError(f"cannot read {path}: {exc}") from exc
    if len(rows) < 2:
        raise CsvParseError(f"{path}: need a header row and at least one data row")

    header = rows[0]
    start = 1 if has_row_labels else 0
    names = [h.strip() for h in header[start:]]
    seen = set()
    for nm in names:
        if nm in seen:
            raise CsvParseError(f"{path}: duplicate column name {nm!r}")
        seen.add(nm)

    labels = []
    data = []
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != len(header):
            raise CsvParseError(
                f"{path}: row {lineno} has {len(row)} fields, expected {len(header)}"
            )
        labels.append(row[0].strip() if has_row_labels else f"r{lineno - 1}")
        parsed = []
        for name, cell in zip(names, row[start:]):
            try:
                parsed.append(float(cell))
            except ValueError:
                raise CsvParseError(
                    f"{path}: row {lineno}, column {name!r}: not a number: {cell.strip()!r}"
                ) from None
        data.append(parsed)
    return DataMatrix(np.array(data, dtype=np.float64), tuple(labels), tuple(names))


def write_csv(dm, path, label_header=""):
    """Write a DataMatrix so that load_csv reads back identical values."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow([label_header, *dm.column_names])
        for label, row in zip(dm.row_labels, dm.values):
            writer.writerow([label, *(repr(float(v)) for v in row)])


_CARS = (
    ("Citroën C2 1.1 Base", 1124, 61, 158, 932, 1659, 3666),
    ("Smart Fortwo Coupé", 698, 52, 135, 730, 1515, 2500),
    ("Mini 1.6 170", 1598, 170, 218, 1215, 1690, 3625),
    ("Nissan Micra 1.2 65", 1240, 65, 154, 965, 1660, 3715),
    ("Renault Clio 3.0 V6", 2946, 255, 245, 1400, 1810, 3812),
    ("Audi A3 1.9 TDI", 1896, 105, 187, 1295, 1765, 4203),
    ("Peugeot 307 1.4 HDI 70", 1398, 70, 160, 1179, 1746, 4202),
    ("Peugeot 407 3.0 V6 BVA", 2946, 211, 229, 1640, 1811, 4676),
    ("Mercedes Classe C 270 CDI", 2685, 170, 230, 1600, 1728, 4528),
    ("BMW 530d", 2993, 218, 245, 1595, 1846, 4841),
    ("Jaguar S-Type 2.7 V6 Bi-Turbo", 2720, 207, 230, 1722, 1818, 4905),
    ("BMW 745i", 4398, 333, 250, 1870, 1902, 5029),
    ("Mercedes Classe S 400 CDI", 3966, 260, 250, 1915, 2092, 5038),
    ("Citroën C3 Pluriel 1.6i", 1587, 110, 185, 1177, 1700, 3934),
    ("BMW Z4 2.5i", 2494, 192, 235, 1260, 1781, 4091),
    ("Audi TT 1.8T 180", 1781, 180, 228, 1280, 1764, 4041),
    ("Aston Martin Vanquish", 5935, 460, 306, 1835, 1923, 4665),
    ("Bentley Continental GT", 5998, 560, 318, 2385, 1918, 4804),
    ("Ferrari Enzo", 5998, 660, 350, 1365, 2650, 4700),
    ("Renault Scenic 1.9 dCi 120", 1870, 120, 188, 1430, 1805, 4259),
    ("Volkswagen Touran 1.9 TDI 105", 1896, 105, 180, 1498, 1794, 4391),
    ("Land Rover Defender Td5", 2495, 122, 135, 1695, 1790, 3883),
    ("Land Rover Discovery Td5", 2495, 138, 157, 2175, 2190, 4705),
    ("Nissan X-Trail 2.2 dCi", 2184, 136, 180, 1520, 1765, 4455),
)

_CARS_COLUMNS = ("capacity", "power", "speed", "weight", "width", "length")


def cars_dataset():
    """The 24-car 2004 specification table used throughout the docs.

    Columns: engine capacity (cc), power (hp), top speed (km/h), weight
    (kg), width (mm), length (mm).
    """
    values = np.array([row[1:] for row in _CARS], dtype=np.float64)
    labels = tuple(row[0] for row in _CARS)
    return DataMatrix(values, labels, _CARS_COLUMNS)
