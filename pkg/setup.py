from setuptools import setup

setup(name='ratfert',
      version=open("ratfert/_version.py").readlines()[-1].split()[-1].strip("\"'"),
      packages=['ratfert',],
      package_data={'ratfert':['data/*.csv']},
      description='Resultants and fertility numbers of rational knots and links',
      install_requires=['scipy>=1.0.0','numpy>=1.17.0','six'],
      python_requires='>=3.8',
      entry_points={'console_scripts':['ratfert = ratfert.cli:main']},
      )
