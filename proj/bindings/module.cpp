#include <pybind11/pybind11.h>
PYBIND11_MODULE(deltatopo, m) { m.doc() = "placeholder"; }
