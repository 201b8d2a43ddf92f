// SPDX-FileCopyrightText: Copyright (c) 2026 The pstruct Authors
// SPDX-License-Identifier: Apache-2.0
#ifndef PSTRUCT_VERSION_HPP
#define PSTRUCT_VERSION_HPP

#define PSTRUCT_VERSION_MAJOR 0
#define PSTRUCT_VERSION_MINOR 1
#define PSTRUCT_VERSION_PATCH 0
#define PSTRUCT_VERSION_STRING "0.1.0"

#endif
