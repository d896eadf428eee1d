"""Symmetric ladder determinantal ideals and their G-biliaison descent."""

from .biliaison import (BiliaisonCertificate, BiliaisonStep, LocalizationMap, descend_chain,
                        descend_step, lemma_local_data, terminal_cells)
from .height import HeightProfile, h_plus, height, i_plus
from .ideal import (CogeneratedSpec, Minor, MixedLadderIdeal, embed_block_matrix,
                    enumerate_generators, from_cogenerated, minor_in_ladder, mk_ideal, normalize,
                    pivot)
from .ladder import (CornerData, Ladder, corners, from_corners, subladder_at, upper_border,
                     validate_ladder)

__all__ = [
    "BiliaisonCertificate", "BiliaisonStep", "CogeneratedSpec", "CornerData", "HeightProfile",
    "Ladder", "LocalizationMap", "Minor", "MixedLadderIdeal", "corners", "descend_chain",
    "descend_step", "embed_block_matrix", "enumerate_generators", "from_cogenerated",
    "from_corners", "h_plus", "height", "i_plus", "lemma_local_data", "minor_in_ladder",
    "mk_ideal", "normalize", "pivot", "subladder_at", "terminal_cells", "upper_border",
    "validate_ladder",
]
