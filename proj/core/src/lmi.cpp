#include "safectl/lmi.hpp"

#include <algorithm>
#include <stdexcept>

namespace safectl::lmi {

int MatrixVariable::size() const {
    switch (structure) {
        case Structure::Symmetric:
            return rows * (rows + 1) / 2;
        case Structure::Diagonal:
            return rows;
        case Structure::BlockDiagonal: {
            int s = 0;
            for (auto [r, c] : block_shapes) s += r * c;
            return s;
        }
        case Structure::Full:
            return rows * cols;
    }
    return 0;
}

MatrixXd MatrixVariable::basis(int k) const {
    MatrixXd B = MatrixXd::Zero(rows, cols);
    switch (structure) {
        case Structure::Symmetric: {
            int idx = 0;
            for (int i = 0; i < rows; ++i)
                for (int j = i; j < cols; ++j, ++idx)
                    if (idx == k) {
                        B(i, j) = 1.0;
                        B(j, i) = 1.0;
                        return B;
                    }
            break;
        }
        case Structure::Diagonal:
            B(k, k) = 1.0;
            return B;
        case Structure::BlockDiagonal: {
            int idx = 0, ro = 0, co = 0;
            for (auto [r, c] : block_shapes) {
                if (k < idx + r * c) {
                    int local = k - idx;
                    B(ro + local / c, co + local % c) = 1.0;
                    return B;
                }
                idx += r * c;
                ro += r;
                co += c;
            }
            break;
        }
        case Structure::Full:
            B(k / cols, k % cols) = 1.0;
            return B;
    }
    throw std::out_of_range("MatrixVariable::basis: bad scalar index");
}

MatrixXd MatrixVariable::unpack(const VectorXd& z) const {
    MatrixXd M = MatrixXd::Zero(rows, cols);
    switch (structure) {
        case Structure::Symmetric: {
            int idx = offset;
            for (int i = 0; i < rows; ++i)
                for (int j = i; j < cols; ++j, ++idx) {
                    M(i, j) = z(idx);
                    M(j, i) = z(idx);
                }
            break;
        }
        case Structure::Diagonal:
            for (int i = 0; i < rows; ++i) M(i, i) = z(offset + i);
            break;
        case Structure::BlockDiagonal: {
            int idx = offset, ro = 0, co = 0;
            for (auto [r, c] : block_shapes) {
                for (int i = 0; i < r; ++i)
                    for (int j = 0; j < c; ++j, ++idx) M(ro + i, co + j) = z(idx);
                ro += r;
                co += c;
            }
            break;
        }
        case Structure::Full: {
            int idx = offset;
            for (int i = 0; i < rows; ++i)
                for (int j = 0; j < cols; ++j, ++idx) M(i, j) = z(idx);
            break;
        }
    }
    return M;
}

void MatrixVariable::pack(const MatrixXd& value, VectorXd& z) const {
    if (value.rows() != rows || value.cols() != cols)
        throw std::invalid_argument("pack: shape mismatch for variable " + name);
    switch (structure) {
        case Structure::Symmetric: {
            int idx = offset;
            for (int i = 0; i < rows; ++i)
                for (int j = i; j < cols; ++j, ++idx) z(idx) = value(i, j);
            break;
        }
        case Structure::Diagonal:
            for (int i = 0; i < rows; ++i) z(offset + i) = value(i, i);
            break;
        case Structure::BlockDiagonal: {
            int idx = offset, ro = 0, co = 0;
            for (auto [r, c] : block_shapes) {
                for (int i = 0; i < r; ++i)
                    for (int j = 0; j < c; ++j, ++idx) z(idx) = value(ro + i, co + j);
                ro += r;
                co += c;
            }
            break;
        }
        case Structure::Full: {
            int idx = offset;
            for (int i = 0; i < rows; ++i)
                for (int j = 0; j < cols; ++j, ++idx) z(idx) = value(i, j);
            break;
        }
    }
}

MatrixXd AffineBlock::evaluate(const VectorXd& z) const {
    MatrixXd F = constant;
    for (const auto& [idx, C] : coeff) F.noalias() += z(idx) * C;
    return F;
}

void AffineBlock::add_coeff(int index, const MatrixXd& C) {
    for (auto& [idx, M] : coeff)
        if (idx == index) {
            M += C;
            return;
        }
    coeff.emplace_back(index, C);
}

MatrixVariable& MaxDetProgram::add_variable(const std::string& name, int rows, int cols,
                                            Structure structure,
                                            std::vector<std::pair<int, int>> block_shapes) {
    MatrixVariable v;
    v.name = name;
    v.rows = rows;
    v.cols = cols;
    v.structure = structure;
    v.block_shapes = std::move(block_shapes);
    v.offset = num_scalars();
    if (structure == Structure::Symmetric && rows != cols)
        throw std::invalid_argument("symmetric variable must be square: " + name);
    if (structure == Structure::BlockDiagonal) {
        int r = 0, c = 0;
        for (auto [br, bc] : v.block_shapes) r += br, c += bc;
        if (r != rows || c != cols)
            throw std::invalid_argument("block shapes do not tile variable " + name);
    }
    variables.push_back(std::move(v));
    return variables.back();
}

const MatrixVariable& MaxDetProgram::variable(const std::string& name) const {
    for (const auto& v : variables)
        if (v.name == name) return v;
    throw std::out_of_range("no variable named " + name);
}

int MaxDetProgram::num_scalars() const {
    int n = 0;
    for (const auto& v : variables) n += v.size();
    return n;
}

std::vector<double> check_point(const std::vector<AffineBlock>& blocks, const VectorXd& z) {
    std::vector<double> margins;
    margins.reserve(blocks.size());
    for (const auto& b : blocks) {
        for (const auto& [idx, C] : b.coeff)
            if (idx >= z.size()) throw std::invalid_argument("check_point: point too short");
        MatrixXd F = b.evaluate(z);
        margins.push_back(b.sense == Sense::NsdStrict ? min_eigenvalue(-F) : min_eigenvalue(F));
    }
    return margins;
}

}  // namespace safectl::lmi
