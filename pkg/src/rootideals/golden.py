"""Bundled reference tables for the exceptional types.

For each type, one row per subset of the simple roots: ``(mask, n, ab)``
where ``mask`` has bit i-1 set when alpha_i belongs to the subset, ``n``
counts the ad-nilpotent ideals of the corresponding parabolic and ``ab``
the abelian ones.  Rows ascend by mask.  These counts are exact integers;
verification against them is bit-for-bit.
"""

from __future__ import annotations

TABLES: dict[str, tuple[tuple[int, int, int], ...]] = {
    "G2": (
        (0, 8, 4), (1, 3, 2), (2, 4, 3), (3, 1, 1),
    ),
    "F4": (
        (0, 105, 16), (1, 24, 6), (2, 35, 12), (3, 10, 5), (4, 32, 10),
        (5, 8, 4), (6, 14, 7), (7, 4, 3), (8, 49, 9), (9, 12, 4), (10, 14, 6),
        (11, 5, 3), (12, 10, 4), (13, 3, 2), (14, 3, 2), (15, 1, 1),
    ),
    "E6": (
        (0, 833, 64), (1, 197, 21), (2, 201, 40), (3, 60, 16), (4, 255, 40),
        (5, 51, 10), (6, 82, 24), (7, 21, 8), (8, 323, 41), (9, 81, 16),
        (10, 60, 22), (11, 23, 11), (12, 80, 22), (13, 16, 6), (14, 19, 10),
        (15, 6, 4), (16, 255, 40), (17, 68, 16), (18, 82, 24), (19, 26, 11),
        (20, 90, 24), (21, 21, 8), (22, 36, 15), (23, 10, 6), (24, 80, 22),
        (25, 27, 11), (26, 19, 10), (27, 9, 6), (28, 20, 10), (29, 6, 4),
        (30, 5, 4), (31, 2, 2), (32, 197, 21), (33, 56, 8), (34, 60, 16),
        (35, 20, 7), (36, 68, 16), (37, 18, 5), (38, 26, 11), (39, 8, 4),
        (40, 81, 16), (41, 24, 6), (42, 23, 11), (43, 9, 5), (44, 27, 11),
        (45, 7, 3), (46, 9, 6), (47, 3, 2), (48, 51, 10), (49, 18, 5),
        (50, 21, 8), (51, 8, 4), (52, 21, 8), (53, 8, 4), (54, 10, 6),
        (55, 4, 3), (56, 16, 6), (57, 7, 3), (58, 6, 4), (59, 3, 2),
        (60, 6, 4), (61, 3, 2), (62, 2, 2), (63, 1, 1),
    ),
    "E7": (
        (0, 4160, 128), (1, 837, 70), (2, 980, 78), (3, 261, 42),
        (4, 1251, 73), (5, 202, 35), (6, 391, 39), (7, 83, 18), (8, 1600, 84),
        (9, 358, 47), (10, 298, 46), (11, 101, 25), (12, 373, 41),
        (13, 64, 20), (14, 83, 18), (15, 21, 8), (16, 1385, 73),
        (17, 314, 45), (18, 374, 39), (19, 110, 25), (20, 456, 48),
        (21, 88, 25), (22, 160, 24), (23, 39, 13), (24, 415, 41),
        (25, 123, 26), (26, 80, 18), (27, 34, 12), (28, 95, 22), (29, 23, 11),
        (30, 20, 8), (31, 6, 4), (32, 1076, 70), (33, 261, 42), (34, 315, 42),
        (35, 95, 26), (36, 377, 45), (37, 77, 23), (38, 138, 25),
        (39, 34, 13), (40, 467, 47), (41, 122, 30), (42, 113, 25),
        (43, 41, 16), (44, 137, 26), (45, 29, 14), (46, 37, 12), (47, 10, 6),
        (48, 291, 35), (49, 89, 23), (50, 94, 18), (51, 34, 13),
        (52, 115, 25), (53, 33, 14), (54, 45, 13), (55, 15, 8), (56, 93, 20),
        (57, 35, 14), (58, 21, 8), (59, 10, 6), (60, 27, 11), (61, 9, 6),
        (62, 6, 4), (63, 2, 2), (64, 879, 32), (65, 215, 24), (66, 231, 23),
        (67, 71, 16), (68, 285, 21), (69, 62, 15), (70, 98, 13), (71, 26, 8),
        (72, 357, 25), (73, 94, 18), (74, 80, 17), (75, 30, 11),
        (76, 100, 15), (77, 23, 10), (78, 27, 8), (79, 8, 4), (80, 288, 22),
        (81, 81, 17), (82, 105, 16), (83, 35, 12), (84, 111, 14),
        (85, 28, 10), (86, 49, 9), (87, 14, 6), (88, 101, 15), (89, 35, 11),
        (90, 32, 10), (91, 14, 7), (92, 31, 8), (93, 9, 5), (94, 10, 4),
        (95, 3, 2), (96, 203, 13), (97, 61, 11), (98, 64, 10), (99, 23, 8),
        (100, 73, 10), (101, 22, 8), (102, 29, 7), (103, 10, 5),
        (104, 86, 11), (105, 28, 9), (106, 26, 8), (107, 11, 6), (108, 31, 8),
        (109, 10, 6), (110, 11, 5), (111, 4, 3), (112, 54, 7), (113, 20, 6),
        (114, 24, 6), (115, 10, 5), (116, 23, 5), (117, 9, 4), (118, 12, 4),
        (119, 5, 3), (120, 18, 5), (121, 8, 4), (122, 8, 4), (123, 4, 3),
        (124, 7, 3), (125, 3, 2), (126, 3, 2), (127, 1, 1),
    ),
    "E8": (
        (0, 25080, 256), (1, 4554, 143), (2, 6188, 124), (3, 1422, 58),
        (4, 7397, 153), (5, 1121, 79), (6, 2183, 63), (7, 392, 26),
        (8, 9541, 163), (9, 1981, 85), (10, 1898, 71), (11, 521, 30),
        (12, 2150, 88), (13, 361, 42), (14, 430, 29), (15, 87, 11),
        (16, 8691, 153), (17, 1818, 80), (18, 2183, 86), (19, 599, 41),
        (20, 2786, 88), (21, 484, 40), (22, 873, 45), (23, 186, 18),
        (24, 2502, 84), (25, 658, 41), (26, 461, 39), (27, 160, 17),
        (28, 566, 43), (29, 112, 18), (30, 105, 16), (31, 24, 6),
        (32, 7169, 149), (33, 1554, 85), (34, 2047, 81), (35, 549, 41),
        (36, 2448, 93), (37, 446, 48), (38, 814, 45), (39, 170, 20),
        (40, 3039, 99), (41, 741, 53), (42, 689, 49), (43, 218, 23),
        (44, 815, 55), (45, 161, 26), (46, 187, 22), (47, 42, 9),
        (48, 1906, 74), (49, 514, 39), (50, 553, 49), (51, 188, 25),
        (52, 726, 45), (53, 163, 20), (54, 255, 28), (55, 70, 12),
        (56, 577, 42), (57, 186, 21), (58, 121, 23), (59, 48, 11),
        (60, 154, 22), (61, 36, 9), (62, 32, 10), (63, 8, 4), (64, 5512, 111),
        (65, 1260, 65), (66, 1583, 61), (67, 439, 31), (68, 1890, 73),
        (69, 378, 40), (70, 636, 35), (71, 141, 16), (72, 2365, 79),
        (73, 598, 45), (74, 580, 39), (75, 182, 19), (76, 668, 47),
        (77, 143, 25), (78, 161, 18), (79, 37, 8), (80, 2091, 74),
        (81, 541, 43), (82, 681, 39), (83, 214, 21), (84, 788, 49),
        (85, 175, 25), (86, 301, 24), (87, 75, 11), (88, 736, 46),
        (89, 225, 26), (90, 184, 19), (91, 69, 10), (92, 206, 27),
        (93, 49, 13), (94, 49, 9), (95, 12, 4), (96, 1279, 55), (97, 356, 32),
        (98, 412, 34), (99, 140, 19), (100, 498, 38), (101, 123, 20),
        (102, 192, 22), (103, 54, 11), (104, 596, 41), (105, 184, 24),
        (106, 165, 23), (107, 65, 13), (108, 200, 25), (109, 52, 13),
        (110, 58, 12), (111, 17, 6), (112, 363, 30), (113, 119, 17),
        (114, 134, 17), (115, 53, 10), (116, 153, 21), (117, 44, 10),
        (118, 68, 12), (119, 23, 6), (120, 127, 19), (121, 48, 11),
        (122, 34, 8), (123, 16, 5), (124, 39, 11), (125, 11, 5), (126, 10, 4),
        (127, 3, 2), (128, 4452, 121), (129, 961, 71), (130, 1139, 71),
        (131, 317, 37), (132, 1411, 79), (133, 267, 43), (134, 461, 41),
        (135, 105, 19), (136, 1787, 85), (137, 433, 48), (138, 388, 45),
        (139, 130, 22), (140, 463, 50), (141, 98, 26), (142, 112, 21),
        (143, 29, 9), (144, 1568, 80), (145, 391, 46), (146, 475, 49),
        (147, 150, 27), (148, 560, 52), (149, 124, 26), (150, 211, 30),
        (151, 55, 14), (152, 512, 49), (153, 161, 27), (154, 124, 25),
        (155, 50, 13), (156, 141, 28), (157, 37, 13), (158, 35, 12),
        (159, 10, 5), (160, 1244, 71), (161, 336, 43), (162, 412, 44),
        (163, 133, 25), (164, 476, 49), (165, 117, 27), (166, 186, 28),
        (167, 50, 14), (168, 580, 52), (169, 170, 31), (170, 170, 29),
        (171, 62, 16), (172, 195, 32), (173, 50, 17), (174, 58, 15),
        (175, 16, 7), (176, 377, 41), (177, 127, 24), (178, 146, 27),
        (179, 57, 16), (180, 169, 28), (181, 51, 14), (182, 75, 18),
        (183, 25, 9), (184, 139, 26), (185, 54, 15), (186, 43, 14),
        (187, 19, 8), (188, 50, 15), (189, 15, 7), (190, 14, 7), (191, 4, 3),
        (192, 924, 52), (193, 239, 30), (194, 260, 34), (195, 86, 19),
        (196, 315, 36), (197, 76, 19), (198, 116, 22), (199, 34, 11),
        (200, 390, 39), (201, 112, 23), (202, 99, 23), (203, 40, 13),
        (204, 119, 24), (205, 32, 13), (206, 36, 12), (207, 12, 6),
        (208, 319, 36), (209, 99, 22), (210, 122, 21), (211, 45, 13),
        (212, 133, 26), (213, 39, 14), (214, 61, 15), (215, 20, 8),
        (216, 121, 24), (217, 47, 15), (218, 40, 11), (219, 19, 7),
        (220, 43, 15), (221, 15, 8), (222, 14, 6), (223, 5, 3),
        (224, 224, 28), (225, 71, 16), (226, 77, 18), (227, 30, 11),
        (228, 87, 20), (229, 27, 10), (230, 38, 13), (231, 14, 7),
        (232, 101, 21), (233, 36, 13), (234, 34, 12), (235, 16, 8),
        (236, 39, 13), (237, 13, 7), (238, 15, 7), (239, 6, 4), (240, 66, 17),
        (241, 26, 10), (242, 29, 9), (243, 13, 6), (244, 31, 12),
        (245, 12, 6), (246, 16, 7), (247, 7, 4), (248, 25, 11), (249, 12, 7),
        (250, 9, 4), (251, 5, 3), (252, 10, 6), (253, 4, 3), (254, 3, 2),
        (255, 1, 1),
    ),
}
