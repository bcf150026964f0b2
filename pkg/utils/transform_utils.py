"""
Fast subset/superset min-transforms over subgraph families

Bit-set families use the O(width * 2^width) layered transform on arrays
indexed by mask (mask 0, the empty set, holds +inf). Explicit families fall
back to a masked reduction over the containment matrix.
"""

import logging
from typing import Tuple

import numpy as np

from utils.lattice_utils import Family

logger = logging.getLogger(__name__)

INF = np.inf


class MinTransforms:
    """Down-set and up-set minima with smallest-id argmins"""

    @staticmethod
    def to_mask_array(values: np.ndarray) -> np.ndarray:
        """Element-indexed values to a mask-indexed array with +inf at the empty set"""
        return np.concatenate(([INF], np.asarray(values, dtype=np.float64)))

    @staticmethod
    def _layer_views(array: np.ndarray, bit: int):
        view = array.reshape(-1, 2, 1 << bit)
        return view[:, 0, :], view[:, 1, :]

    @staticmethod
    def _take_better(tgt, tgt_arg, src, src_arg):
        better = (src < tgt) | ((src == tgt) & (src_arg < tgt_arg))
        tgt[better] = src[better]
        tgt_arg[better] = src_arg[better]

    @staticmethod
    def mask_transform(values: np.ndarray, width: int, upward: bool) -> Tuple[np.ndarray, np.ndarray]:
        """
        Subset-min (``upward=False``) or superset-min (``upward=True``)

        Args:
            values: Mask-indexed array of length 2**width
            width: Number of ground bits

        Returns:
            (minima, argmin masks), both mask-indexed; ties go to the smaller mask
        """
        out = np.array(values, dtype=np.float64, copy=True)
        arg = np.arange(out.size, dtype=np.int64)
        for bit in range(width):
            clear, set_ = MinTransforms._layer_views(out, bit)
            arg_clear, arg_set = MinTransforms._layer_views(arg, bit)
            if upward:
                MinTransforms._take_better(clear, arg_clear, set_, arg_set)
            else:
                MinTransforms._take_better(set_, arg_set, clear, arg_clear)
        return out, arg

    @staticmethod
    def strict_mask_transform(values: np.ndarray, width: int, upward: bool) -> Tuple[np.ndarray, np.ndarray]:
        """Minimum over proper subsets (or proper supersets); +inf and -1 where none"""
        closed, closed_arg = MinTransforms.mask_transform(values, width, upward)
        out = np.full_like(closed, INF)
        arg = np.full(closed.size, -1, dtype=np.int64)
        for bit in range(width):
            out_clear, out_set = MinTransforms._layer_views(out, bit)
            arg_clear, arg_set = MinTransforms._layer_views(arg, bit)
            src_clear, src_set = MinTransforms._layer_views(closed, bit)
            srcarg_clear, srcarg_set = MinTransforms._layer_views(closed_arg, bit)
            if upward:
                # mask without bit: candidate is the closed up-minimum of mask | bit
                MinTransforms._take_better(out_clear, arg_clear, src_set, srcarg_set)
            else:
                MinTransforms._take_better(out_set, arg_set, src_clear, srcarg_clear)
        arg[~np.isfinite(out)] = -1
        return out, arg

    @staticmethod
    def _matrix_min(family: Family, values: np.ndarray, upward: bool, strict: bool):
        leq = family.leq_matrix()
        admissible = leq if upward else leq.T
        if strict:
            admissible = admissible & ~np.eye(family.size, dtype=bool)
        candidates = np.where(admissible, np.asarray(values, dtype=np.float64)[None, :], INF)
        arg = np.argmin(candidates, axis=1).astype(np.int64)
        out = candidates[np.arange(family.size), arg]
        arg[~np.isfinite(out)] = -1
        return out, arg

    @staticmethod
    def _family_min(family: Family, values: np.ndarray, upward: bool, strict: bool):
        if not family.is_bitset:
            return MinTransforms._matrix_min(family, values, upward, strict)
        array = MinTransforms.to_mask_array(values)
        if strict:
            out, arg = MinTransforms.strict_mask_transform(array, family.width, upward)
        else:
            out, arg = MinTransforms.mask_transform(array, family.width, upward)
        ids = arg[1:] - 1
        ids[arg[1:] < 0] = -1
        return out[1:], ids

    @staticmethod
    def down_min(family: Family, values: np.ndarray, strict: bool = False) -> Tuple[np.ndarray, np.ndarray]:
        """Per element a: min of values over b <= a (b < a when strict), with argmin ids"""
        return MinTransforms._family_min(family, values, upward=False, strict=strict)

    @staticmethod
    def up_min(family: Family, values: np.ndarray, strict: bool = False) -> Tuple[np.ndarray, np.ndarray]:
        """Per element a: min of values over b >= a (b > a when strict), with argmin ids"""
        return MinTransforms._family_min(family, values, upward=True, strict=strict)
