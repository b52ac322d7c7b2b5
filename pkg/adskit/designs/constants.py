# Copyright 2025 The adskit Authors
# SPDX-License-Identifier: Apache-2.0
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
# http://www.apache.org/licenses/LICENSE-2.0
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from __future__ import annotations

SCHEDULING_INTERVAL = 0.01  # seconds

# elements per difference block before bincount
DIFF_CHUNK = 1 << 22
# subsets per vectorized batch in exhaustive search
SEARCH_BATCH = 1 << 14

# generator family ids
PALEY_QR = "paley_qr"
CYCLOTOMIC_FAMILIES = (
    "quartic",
    "quartic_zero",
    "quartic_zero_neg",
    "quartic_pair",
    "octic",
    "dpw_union_sq",
    "octic_zero",
    "cubic",
    "cubic_zero",
)
EXPERIMENTAL_FAMILIES = ("octic",)
PRODUCT_FAMILIES = (
    "jungnickel_dds",
    "cor55",
    "dhm_quartic",
    "zlz_z4q",
    "zlz_pq_squares",
    "tang_ding",
    "dpw_skew",
)
PALEY_HADAMARD_KINDS = ("qr", "singer", "twin_prime", "hall_sextic")
TRANSFER_DIRECTIONS = ("ds_minus_elem", "ads_plus_elem_to_ds", "ds_plus_elem", "ads_minus_elem_to_ds")

CITATIONS = {
    "paley_qr": "Paley;Ma94",
    "quartic": "DThesis;CDR",
    "quartic_zero": "DHL",
    "quartic_zero_neg": "WW",
    "quartic_pair": "DHL",
    "octic": "DThesis;CDR",
    "dpw_union_sq": "DPW",
    "octic_zero": "Le1",
    "cubic": "St",
    "cubic_zero": "St",
    "ck_pds": "CK",
    "ds_ads_transfer": "AD",
    "gmw_like_support": "AD",
    "pn_graph_ads": "AD;TS",
    "paley_hadamard_ds": "Jung;JP",
    "jungnickel_dds": "Jung1",
    "cor55": "Jung1",
    "dhm_quartic": "DH",
    "zlz_z4q": "ZLZ",
    "zlz_pq_squares": "ZLZ;Ke",
    "tang_ding": "TD",
    "dpw_skew": "DPW",
    "interleave": "AD",
    "brute_search": "exhaustive",
}

# (i, j, l) class triples of the quartic products, for the positive orientation of y
DHM_Y1_TRIPLES = ((0, 1, 3), (0, 2, 1))
DHM_X1_TRIPLES = ((1, 0, 3), (0, 1, 2))
DHM_Y1_TRIPLES_ZERO = ((0, 1, 3), (0, 2, 3), (1, 2, 0), (1, 3, 0))
DHM_X1_TRIPLES_ZERO = ((0, 1, 2), (0, 3, 2), (1, 0, 3), (1, 2, 3))

# cubic families exist exactly at these orders
CUBIC_ORDERS = (7, 19, 25)
CUBIC_ZERO_ORDERS = (13, 37)

# reference candidate tables, boxed entries marked
T1_REFERENCE = (
    ((2, 1, 0, 1), False),
    ((8, 3, 0, 1), False),
    ((22, 5, 0, 1), True),
    ((38, 11, 2, 1), False),
    ((40, 17, 6, 1), False),
    ((44, 7, 0, 1), True),
    ((50, 19, 6, 1), True),
    ((74, 9, 0, 1), False),
    ((92, 17, 2, 1), False),
    ((104, 47, 20, 1), False),
    ((112, 11, 0, 1), False),
    ((134, 31, 6, 1), False),
    ((140, 43, 12, 1), True),
    ((152, 33, 6, 1), False),
    ((158, 13, 0, 1), True),
    ((164, 59, 20, 1), True),
    ((170, 23, 2, 1), True),
    ((182, 49, 12, 1), True),
    ((194, 85, 36, 1), False),
    ((200, 93, 42, 1), False),
)
TV2_REFERENCE = (
    ((6, 3, 1, 4), False),
    ((20, 5, 1, 18), True),
    ((32, 13, 5, 30), False),
    ((42, 7, 1, 40), True),
    ((72, 9, 1, 70), False),
    ((96, 43, 19, 94), False),
    ((102, 23, 5, 100), False),
    ((110, 11, 1, 108), False),
    ((122, 37, 11, 120), False),
    ((146, 53, 19, 144), False),
    ((150, 41, 11, 148), True),
    ((156, 13, 1, 154), True),
    ((180, 75, 31, 178), True),
    ((192, 89, 41, 190), False),
)
# the t = 1 parity rule also catches this unboxed entry (v = 92 is 4 mod 8)
T1_EXTRA_RULED_OUT = ((92, 17, 2, 1),)

HALL_DEFAULT_MAX_W = 6
