"""Feature engineering: POI distances, amenity binarization, date expansion,
one-hot encoding, scaling, and design-matrix assembly."""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass
from importlib import resources

import numpy as np

from .errors import AssemblyError, SchemaError
from .tabular import Column, Table

EARTH_RADIUS_KM = 6371.0088


@dataclass(frozen=True)
class GeoPoint:
    lat: float
    lon: float

    def __post_init__(self):
        if not -90.0 <= self.lat <= 90.0:
            raise ValueError(f"latitude out of range: {self.lat}")
        if not -180.0 <= self.lon <= 180.0:
            raise ValueError(f"longitude out of range: {self.lon}")


@dataclass(frozen=True)
class PoiSet:
    """Named points of interest; order fixes the feature column order."""

    pois: tuple[tuple[str, GeoPoint], ...]

    def __post_init__(self):
        names = [n for n, _ in self.pois]
        if len(set(names)) != len(names):
            raise ValueError("POI names must be unique")

    def __len__(self) -> int:
        return len(self.pois)


@dataclass(frozen=True)
class Scaling:
    means: np.ndarray
    stds: np.ndarray
    constant_features: tuple[str, ...] = ()


@dataclass(frozen=True)
class FeatureMatrix:
    """Dense design matrix with named columns and a target vector."""

    x: np.ndarray
    feature_names: tuple[str, ...]
    y: np.ndarray
    scaling: Scaling | None = None

    def __post_init__(self):
        if self.x.ndim != 2:
            raise AssemblyError(f"x must be 2-d, got shape {self.x.shape}")
        if len(self.feature_names) != self.x.shape[1]:
            raise AssemblyError(
                f"{len(self.feature_names)} names for {self.x.shape[1]} columns"
            )
        if len(set(self.feature_names)) != len(self.feature_names):
            raise AssemblyError("feature names must be unique")
        if self.y.shape != (self.x.shape[0],):
            raise AssemblyError(f"y shape {self.y.shape} mismatches x {self.x.shape}")
        if not (np.isfinite(self.x).all() and np.isfinite(self.y).all()):
            raise AssemblyError("feature matrix contains non-finite values")

    @property
    def n_rows(self) -> int:
        return self.x.shape[0]

    @property
    def n_features(self) -> int:
        return self.x.shape[1]

    def take(self, indices) -> "FeatureMatrix":
        idx = np.asarray(indices)
        return FeatureMatrix(self.x[idx], self.feature_names, self.y[idx], self.scaling)

    def select(self, names: list[str]) -> "FeatureMatrix":
        pos = [self.feature_names.index(n) for n in names]
        return FeatureMatrix(self.x[:, pos], tuple(names), self.y, None)


def haversine_km(a: GeoPoint, b: GeoPoint) -> float:
    """Great-circle distance in kilometers (R = 6371.0088 km)."""
    la1, lo1, la2, lo2 = map(math.radians, (a.lat, a.lon, b.lat, b.lon))
    s = (
        math.sin((la2 - la1) / 2.0) ** 2
        + math.cos(la1) * math.cos(la2) * math.sin((lo2 - lo1) / 2.0) ** 2
    )
    return 2.0 * EARTH_RADIUS_KM * math.asin(min(1.0, math.sqrt(s)))


def load_pois(path) -> PoiSet:
    """Read a name,lat,lon CSV into a PoiSet."""
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if [h.strip().lower() for h in header[:3]] != ["name", "lat", "lon"]:
            raise SchemaError(f"{path}: POI file must have header name,lat,lon")
        pois = tuple(
            (row[0], GeoPoint(float(row[1]), float(row[2]))) for row in reader if row
        )
    return PoiSet(pois)


def default_pois() -> PoiSet:
    """The 13 shipped Austin attractions (replaceable configuration)."""
    ref = resources.files("rentlab.data").joinpath("pois_austin.csv")
    with resources.as_file(ref) as path:
        return load_pois(path)


def poi_distance_features(
    table: Table,
    pois: PoiSet,
    lat: str = "latitude",
    lon: str = "longitude",
) -> tuple[Table, list[int]]:
    """Append one dist_<name>_km column per POI.

    Rows with missing coordinates get missing distances; their indices are
    returned so callers can report them.
    """
    lats = table.values(lat)
    lons = table.values(lon)
    bad_rows = [i for i in range(table.n_rows) if lats[i] is None or lons[i] is None]
    out = table
    for name, point in pois.pois:
        values = []
        for i in range(table.n_rows):
            if lats[i] is None or lons[i] is None:
                values.append(None)
            else:
                values.append(haversine_km(GeoPoint(lats[i], lons[i]), point))
        out = out.with_column(f"dist_{name}_km", Column("numeric", tuple(values)))
    return out, bad_rows


def parse_amenities(cell: str | None, delimiter: str | None = None) -> list[str]:
    """Split an amenities cell into a list of amenity strings.

    JSON-style lists (the raw dump format) and semicolon-separated strings are
    both accepted; pass an explicit delimiter to force splitting on it.
    """
    if cell is None:
        return []
    text = cell.strip()
    if not text:
        return []
    if delimiter is None and text.startswith("["):
        try:
            items = json.loads(text)
            return [str(a).strip() for a in items if str(a).strip()]
        except (json.JSONDecodeError, TypeError):
            text = text.strip("[]")
            return [a.strip().strip('"').strip() for a in text.split(",") if a.strip().strip('"')]
    sep = delimiter or ";"
    return [a.strip() for a in text.split(sep) if a.strip()]


def top_k_amenities(
    table: Table,
    k: int = 30,
    col: str = "amenities",
    delimiter: str | None = None,
) -> list[str]:
    """The k most frequent amenity strings, ties broken alphabetically."""
    if k <= 0:
        raise ValueError(f"k must be positive, got {k}")
    counts: dict[str, int] = {}
    for cell in table.values(col):
        for a in parse_amenities(cell, delimiter):
            counts[a] = counts.get(a, 0) + 1
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return [name for name, _ in ranked[:k]]


def binarize_amenities(
    table: Table,
    amenities: list[str],
    col: str = "amenities",
    delimiter: str | None = None,
) -> Table:
    """Add one 0/1 column per amenity plus amenity_count (full list length)."""
    if not amenities:
        raise ValueError("amenity list must be non-empty")
    parsed = [set(parse_amenities(cell, delimiter)) for cell in table.values(col)]
    lengths = [len(parse_amenities(cell, delimiter)) for cell in table.values(col)]
    out = table
    for a in amenities:
        out = out.with_column(
            a, Column("integer", tuple(1 if a in s else 0 for s in parsed))
        )
    out = out.with_column("amenity_count", Column("integer", tuple(lengths)))
    return out


def expand_date(table: Table, date_col: str = "date") -> Table:
    """Append integer year, month (1-12), day_of_week (0=Monday) columns."""
    dates = table.column(date_col)
    if dates.kind != "date":
        raise SchemaError(f"expand_date needs a date column, {date_col!r} is {dates.kind}")
    years, months, dows = [], [], []
    for d in dates.values:
        if d is None:
            years.append(None)
            months.append(None)
            dows.append(None)
        else:
            years.append(d.year)
            months.append(d.month)
            dows.append(d.weekday())
    out = table.with_column("year", Column("integer", tuple(years)))
    out = out.with_column("month", Column("integer", tuple(months)))
    out = out.with_column("day_of_week", Column("integer", tuple(dows)))
    return out


def one_hot(table: Table, col: str) -> Table:
    """Replace a text column by <col>_<category> indicator columns.

    Categories are the sorted distinct non-missing values; a missing source
    cell yields all zeros.
    """
    source = table.column(col)
    if source.kind != "text":
        raise SchemaError(f"one_hot needs a text column, {col!r} is {source.kind}")
    categories = sorted({v for v in source.values if v is not None})
    out = table.without_columns([col])
    for cat in categories:
        out = out.with_column(
            f"{col}_{cat}",
            Column("integer", tuple(1 if v == cat else 0 for v in source.values)),
        )
    return out


def standardize(m: FeatureMatrix) -> FeatureMatrix:
    """Scale every column to zero mean, unit (population) std.

    Zero-variance columns become all-zero and are recorded in the scaling so
    they can be flagged downstream; the stored params reproduce the transform
    on held-out rows and invert it.
    """
    means = m.x.mean(axis=0)
    stds = m.x.std(axis=0)
    constant = tuple(
        name for name, s in zip(m.feature_names, stds) if s == 0.0
    )
    safe = np.where(stds == 0.0, 1.0, stds)
    x = (m.x - means) / safe
    return FeatureMatrix(x, m.feature_names, m.y, Scaling(means, stds, constant))


def apply_scaling(m: FeatureMatrix, scaling: Scaling) -> FeatureMatrix:
    """Apply train-set scaling parameters to held-out rows."""
    safe = np.where(scaling.stds == 0.0, 1.0, scaling.stds)
    x = (m.x - scaling.means) / safe
    return FeatureMatrix(x, m.feature_names, m.y, scaling)


def destandardize(m: FeatureMatrix) -> FeatureMatrix:
    """Invert standardize(); constant columns come back at their mean."""
    if m.scaling is None:
        raise ValueError("matrix carries no scaling parameters")
    safe = np.where(m.scaling.stds == 0.0, 1.0, m.scaling.stds)
    x = m.x * safe + m.scaling.means
    return FeatureMatrix(x, m.feature_names, m.y, None)


def assemble_matrix(table: Table, target: str, feature_cols: list[str]) -> FeatureMatrix:
    """Stack the named columns into a float design matrix, target last-checked.

    Any missing cell aborts assembly with the offending column and rows named.
    """
    offending: list[str] = []
    arrays = []
    for name in feature_cols + [target]:
        col = table.column(name)
        if col.kind not in ("numeric", "integer", "boolean"):
            raise AssemblyError(f"column {name!r} has kind {col.kind}, need numeric")
        rows = [i for i, v in enumerate(col.values) if v is None]
        if rows:
            head = ", ".join(map(str, rows[:5]))
            offending.append(f"{name} (rows {head}{'...' if len(rows) > 5 else ''})")
            continue
        arrays.append(np.array([float(v) for v in col.values], dtype=np.float64))
    if offending:
        raise AssemblyError("missing cells in: " + "; ".join(offending))
    y = arrays.pop()
    x = np.column_stack(arrays) if arrays else np.empty((len(y), 0))
    return FeatureMatrix(x, tuple(feature_cols), y, None)


TARGET_HEADER = "target"


def matrix_to_csv(m: FeatureMatrix, path) -> None:
    """Serialize a FeatureMatrix: header = feature names, final col = target."""
    if TARGET_HEADER in m.feature_names:
        raise AssemblyError(f"feature named {TARGET_HEADER!r} collides with target column")
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(list(m.feature_names) + [TARGET_HEADER])
        for i in range(m.n_rows):
            writer.writerow([repr(float(v)) for v in m.x[i]] + [repr(float(m.y[i]))])


def matrix_from_csv(path) -> FeatureMatrix:
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        rows = [[float(c) for c in row] for row in reader if row]
    if not header or header[-1] != TARGET_HEADER:
        raise SchemaError(f"{path}: last column must be {TARGET_HEADER!r}")
    data = np.array(rows, dtype=np.float64) if rows else np.empty((0, len(header)))
    return FeatureMatrix(data[:, :-1], tuple(header[:-1]), data[:, -1], None)
