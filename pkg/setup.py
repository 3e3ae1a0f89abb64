from setuptools import setup, find_packages

setup(name='hopfdouble',
      version='0.1.0',
      packages=find_packages(exclude=['tests']),
      package_data={'hopfdouble.config': ['printed_tables.yml']},
      install_requires=[
          'numpy',
          'easydict',
          'networkx',
          'psutil',
          'pyyaml',
          'sympy'
      ],
      extras_require={'test': ['pytest']},
      entry_points={'console_scripts': ['hopfdouble = hopfdouble.tools.hopfcli:main']}
      )
