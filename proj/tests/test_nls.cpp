#include "doctest.h"

TEST_SUITE("nls") {}
