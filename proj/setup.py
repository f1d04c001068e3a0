import subprocess
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        extdir = Path(self.get_ext_fullpath(ext.name)).resolve().parent
        source = Path(__file__).resolve().parent
        build_temp = Path(self.build_temp).resolve()
        build_temp.mkdir(parents=True, exist_ok=True)
        args = [
            f"-DMAXCONV_PYTHON_OUTPUT_DIR={extdir}",
            "-DMAXCONV_BUILD_PYTHON=ON",
            "-DMAXCONV_BUILD_CLI=OFF",
            "-DMAXCONV_BUILD_TESTS=OFF",
            "-DCMAKE_BUILD_TYPE=Release",
        ]
        try:
            import pybind11

            args.append(f"-Dpybind11_DIR={pybind11.get_cmake_dir()}")
        except ImportError:
            pass
        subprocess.run(
            ["cmake", "-S", str(source), "-B", str(build_temp), *args],
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build_temp),
             "--target", "maxconv_pymodule", "-j"],
            check=True,
        )


setup(
    packages=["maxconv"],
    package_dir={"": "python"},
    ext_modules=[CMakeExtension("maxconv._core")],
    cmdclass={"build_ext": CMakeBuild},
    zip_safe=False,
)
