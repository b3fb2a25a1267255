#include "tangle3/matrix_io.hpp"

#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <string>

#include "tangle3/errors.hpp"

namespace tangle3 {

Matrix read_matrix(std::istream& in) {
    long dim = 0;
    if (!(in >> dim) || dim <= 0 || dim > 64) throw BadParams("matrix file: bad dimension header");
    Matrix m(dim, dim);
    for (long r = 0; r < dim; ++r) {
        for (long c = 0; c < dim; ++c) {
            double re = 0.0;
            double im = 0.0;
            if (!(in >> re >> im)) {
                throw BadParams("matrix file: expected " + std::to_string(dim * dim) +
                                " entries, stopped at row " + std::to_string(r));
            }
            m(r, c) = cplx(re, im);
        }
    }
    std::string trailing;
    if (in >> trailing) throw BadParams("matrix file: trailing data '" + trailing + "'");
    return m;
}

DensityMatrix read_density_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw BadParams("cannot open matrix file " + path.string());
    return DensityMatrix(read_matrix(in));
}

void write_matrix(std::ostream& out, const Matrix& m) {
    const auto old_precision = out.precision(std::numeric_limits<double>::max_digits10);
    out << m.rows() << '\n';
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            out << m(r, c).real() << ' ' << m(r, c).imag() << '\n';
        }
    }
    out.precision(old_precision);
}

void write_density_file(const std::filesystem::path& path, const DensityMatrix& rho) {
    std::ofstream out(path);
    if (!out) throw BadParams("cannot write matrix file " + path.string());
    write_matrix(out, rho.matrix());
}

}  // namespace tangle3
