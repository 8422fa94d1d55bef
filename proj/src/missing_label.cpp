#include "qhecke/tableaux.hpp"
