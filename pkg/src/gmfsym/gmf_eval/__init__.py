from .evaluate import c_sigma, determinant, evaluate, permanent, permanent_naive
from .exact import I, ONE, ZERO, ExactComplex
from .matrix import (
    SquareMatrix,
    constant,
    identity,
    permutation_matrix,
    random_matrix,
    random_symmetric_matrix,
    s_sigma_matrix,
)
from .weights import (
    NotASubgroupError,
    WeightedGroup,
    WeightError,
    alternating_group,
    built_in_weights,
    chi_hat,
    class_function_weights,
    cyclic_group,
    cyclic_power_weights,
    gaussian_cyclic_weights,
    generated_group,
    inverse_weights,
    is_class_function,
    random_class_table,
    random_function_weights,
    symmetric_group,
)
