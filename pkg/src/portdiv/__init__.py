"""Diversity indicators built from variety, balance and disparity.

The three components are computed separately and combined into the
three-factor ``div`` indicator; Rao-Stirling, Gini-Simpson and Shannon are
provided for comparison.
"""

from portdiv.analysis import (
    CorrelationTable,
    batch_indicators,
    correlation_table,
    pearson,
    spearman,
)
from portdiv.dataio import (
    MatrixFile,
    OutputTable,
    load_matrix,
    load_similarity,
    read_output,
    write_output,
)
from portdiv.disparity import (
    cosine_similarity,
    to_disparity,
    to_similarity,
    validate_disparity,
    validate_similarity,
)
from portdiv.errors import (
    DimensionError,
    DiversityError,
    DomainError,
    ParseError,
    RangeError,
    ShapeError,
    SymmetryError,
    ValidationError,
)
from portdiv.measures import (
    IndicatorRecord,
    coefficient_of_variation,
    div,
    gini,
    gini_simpson,
    indicator_record,
    mean_disparity,
    rao_stirling,
    relative_variety,
    shannon,
)

__version__ = "0.1.0"
