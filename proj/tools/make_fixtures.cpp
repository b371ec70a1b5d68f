// Writes the deterministic synthetic corpus as PGM files.
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "sadt/pgm.h"
#include "synthetic.h"

int main(int argc, char** argv) {
    CLI::App app{"Generate the synthetic 8-bit test corpus"};
    std::filesystem::path dir;
    int count = 10;
    int size = 512;
    app.add_option("dir", dir, "Output directory")->required();
    app.add_option("--count", count, "Number of images")->check(CLI::Range(1, 100))->capture_default_str();
    app.add_option("--size", size, "Width and height in pixels")->check(CLI::Range(4, 8192))->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    try {
        std::filesystem::create_directories(dir);
        for (const auto& [name, image] : sadt::synthetic::corpus(count, size, size)) {
            const auto path = dir / (name + ".pgm");
            sadt::save_pgm(path, image);
            std::cout << path.string() << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
