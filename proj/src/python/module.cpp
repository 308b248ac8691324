#include <pybind11/pybind11.h>
PYBIND11_MODULE(_vcfan, m) { m.doc() = "placeholder"; }
