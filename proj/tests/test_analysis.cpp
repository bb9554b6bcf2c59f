#include "doctest.h"

TEST_SUITE("analysis") {}
