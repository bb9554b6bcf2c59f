#include "doctest.h"

TEST_SUITE("fd_oracle") {}
